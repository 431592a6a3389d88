//! Hall basic commutators.
//!
//! Basic commutators on letters `x1, ..., xd` are built inductively by
//! weight. A bracket `[ci, cj]` of weight `k` is basic when the component
//! weights sum to `k`, `ci > cj` in the generation order, and — writing
//! `ci = [cs, ct]` — `cj >= ct`. The order continues across weights (higher
//! weight sorts later); within a weight stratum this implementation orders
//! brackets by the pair (right index, left index), which keeps generation
//! deterministic.

use std::fmt;

use num_traits::ToPrimitive;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::witt::witt;

/// One basic commutator. Brackets store the `order_index` of their
/// components, which always refer to earlier entries of the owning
/// [`HallBasis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Term {
    /// A letter `x{i}`; the index is 0-based.
    Letter(usize),
    /// `[left, right]`, both given by `order_index`.
    Bracket(usize, usize),
}

/// A basis element together with its weight and position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasicCommutator {
    pub term: Term,
    pub weight: usize,
    pub order_index: usize,
}

/// All basic commutators of weight at most `max_weight` on `d` letters,
/// numbered in generation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallBasis {
    letters: usize,
    max_weight: usize,
    elements: Vec<BasicCommutator>,
    /// `weight_start[w]` is the index of the first element of weight `w + 1`.
    weight_start: Vec<usize>,
}

/// Generate the Hall basis on `d` letters up to `max_weight` with default
/// caps.
pub fn hall_basis(d: usize, max_weight: usize) -> Result<HallBasis> {
    HallBasis::generate(d, max_weight, &Caps::default())
}

impl HallBasis {
    /// Generate the basis, failing if the configured element cap is hit.
    pub fn generate(d: usize, max_weight: usize, caps: &Caps) -> Result<HallBasis> {
        if d == 0 || max_weight == 0 {
            return Err(Error::Domain(
                "hall basis requires d >= 1 and max_weight >= 1".into(),
            ));
        }
        if d > caps.basis_elements {
            return Err(Error::CapExceeded(format!(
                "{d} letters exceed the basis cap of {}",
                caps.basis_elements
            )));
        }
        let mut elements: Vec<BasicCommutator> = Vec::new();
        let mut weight_start = vec![0usize];
        for i in 0..d {
            elements.push(BasicCommutator {
                term: Term::Letter(i),
                weight: 1,
                order_index: i,
            });
        }
        for k in 2..=max_weight {
            weight_start.push(elements.len());
            let mut stratum: Vec<(usize, usize)> = Vec::new();
            // Right component first in the sort key, then left.
            for j in 0..weight_start[k - 1] {
                let wj = elements[j].weight;
                if wj >= k {
                    break;
                }
                let wi = k - wj;
                let (lo, hi) = self::stratum_range(&weight_start, elements.len(), wi);
                for i in lo..hi {
                    if i <= j {
                        continue;
                    }
                    if let Term::Bracket(_, t) = elements[i].term {
                        if j < t {
                            continue;
                        }
                    }
                    stratum.push((j, i));
                }
            }
            stratum.sort_unstable();
            for (j, i) in stratum {
                let order_index = elements.len();
                if order_index >= caps.basis_elements {
                    return Err(Error::CapExceeded(format!(
                        "hall basis on {d} letters exceeds {} elements at weight {k}",
                        caps.basis_elements
                    )));
                }
                elements.push(BasicCommutator {
                    term: Term::Bracket(i, j),
                    weight: k,
                    order_index,
                });
            }
        }
        weight_start.push(elements.len());
        Ok(HallBasis {
            letters: d,
            max_weight,
            elements,
            weight_start,
        })
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[BasicCommutator] {
        &self.elements
    }

    pub fn get(&self, order_index: usize) -> &BasicCommutator {
        &self.elements[order_index]
    }

    /// Indices `[start, end)` of the weight-`w` stratum.
    pub fn stratum(&self, w: usize) -> std::ops::Range<usize> {
        let (lo, hi) = stratum_range(&self.weight_start, self.elements.len(), w);
        lo..hi
    }

    /// Number of elements of weight exactly `w`.
    pub fn stratum_count(&self, w: usize) -> usize {
        self.stratum(w).len()
    }

    /// Render an element as nested brackets over `x1..xd`.
    pub fn render(&self, order_index: usize) -> String {
        match self.elements[order_index].term {
            Term::Letter(i) => format!("x{}", i + 1),
            Term::Bracket(l, r) => format!("[{},{}]", self.render(l), self.render(r)),
        }
    }

    /// Expand an element into the letter word realizing it, with
    /// `[a, b] = a^-1 b^-1 a b`. Letters are emitted as `(index, sign)`.
    pub fn expand_letters(&self, order_index: usize) -> Vec<(usize, i8)> {
        match self.elements[order_index].term {
            Term::Letter(i) => vec![(i, 1)],
            Term::Bracket(l, r) => {
                let a = self.expand_letters(l);
                let b = self.expand_letters(r);
                let inv = |w: &[(usize, i8)]| {
                    w.iter().rev().map(|&(i, s)| (i, -s)).collect::<Vec<_>>()
                };
                let mut word = inv(&a);
                word.extend(inv(&b));
                word.extend(a.iter().copied());
                word.extend(b.iter().copied());
                word
            }
        }
    }
}

fn stratum_range(weight_start: &[usize], total: usize, w: usize) -> (usize, usize) {
    if w == 0 || w > weight_start.len() {
        return (0, 0);
    }
    let lo = weight_start[w - 1];
    let hi = if w < weight_start.len() {
        weight_start[w]
    } else {
        total
    };
    (lo, hi)
}

impl fmt::Display for HallBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.elements {
            writeln!(f, "{:4}  w{}  {}", e.order_index, e.weight, self.render(e.order_index))?;
        }
        Ok(())
    }
}

/// Cross-check a generated basis against the Witt formula stratum by
/// stratum. Returns the per-weight counts on success.
pub fn verify_stratum_counts(basis: &HallBasis) -> Result<Vec<usize>> {
    let mut counts = Vec::new();
    for w in 1..=basis.max_weight() {
        let count = basis.stratum_count(w);
        let expected = witt(w as u64, basis.letters() as u64)?;
        let expected = expected.to_usize().ok_or_else(|| {
            Error::CapExceeded(format!("witt({w}, {}) exceeds usize", basis.letters()))
        })?;
        if count != expected {
            return Err(Error::Domain(format!(
                "weight-{w} stratum has {count} elements, Witt formula says {expected}"
            )));
        }
        counts.push(count);
    }
    Ok(counts)
}
