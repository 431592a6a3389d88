//! Resource caps for the exponential-cost operations.
//!
//! Basis generation, permutation closure, generator search, and subgroup
//! enumeration all have configurable limits so that a bad input degrades
//! into an error instead of a hang. The `NILMULT_CAPS` environment variable
//! overrides individual caps with a comma-separated `key=value` list, e.g.
//! `NILMULT_CAPS=basis=2000000,rank=256`.

/// Limits applied by the costly operations. See [`Caps::default`] for the
/// stock values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of Hall basis elements generated (`basis=`).
    pub basis_elements: usize,
    /// Maximum closure size for permutation-generated groups (`closure=`).
    pub closure: usize,
    /// Maximum order of a group built from an abelian description or a
    /// quotient construction (`table=`).
    pub table_order: usize,
    /// Maximum group order for the minimal-generator search (`mingen=`).
    pub min_generators_order: usize,
    /// Maximum group order for exhaustive subgroup enumeration and the
    /// special-rank computation (`rank=`).
    pub special_rank_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            basis_elements: 1_000_000,
            closure: 2000,
            table_order: 2000,
            min_generators_order: 512,
            special_rank_order: 128,
        }
    }
}

impl Caps {
    /// Default caps with overrides taken from the `NILMULT_CAPS` environment
    /// variable. Unknown keys and unparsable values are ignored.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Ok(spec) = std::env::var("NILMULT_CAPS") {
            caps.apply_overrides(&spec);
        }
        caps
    }

    /// Apply a `key=value,key=value` override string.
    pub fn apply_overrides(&mut self, spec: &str) {
        for part in spec.split(',') {
            let part = part.trim();
            let Some((key, value)) = part.split_once('=') else {
                continue;
            };
            let Ok(value) = value.trim().parse::<usize>() else {
                continue;
            };
            match key.trim() {
                "basis" => self.basis_elements = value,
                "closure" => self.closure = value,
                "table" => self.table_order = value,
                "mingen" => self.min_generators_order = value,
                "rank" => self.special_rank_order = value,
                _ => {}
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let mut caps = Caps::default();
        caps.apply_overrides("basis=5, rank=7,bogus=1,closure=zzz");
        assert_eq!(caps.basis_elements, 5);
        assert_eq!(caps.special_rank_order, 7);
        assert_eq!(caps.closure, Caps::default().closure);
    }
}
