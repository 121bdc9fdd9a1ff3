use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ToeplitzParams;

/// The progression `{step, 2 step, ..., terms * step}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Progression {
    pub step: usize,
    pub terms: usize,
}

/// Result of testing a set for closure under positive differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Closure {
    Progression(Progression),
    /// `larger - smaller` is missing from the set.
    Counterexample {
        larger: usize,
        smaller: usize,
    },
}

/// A set of positive integers is closed under positive differences exactly
/// when it is `{d, 2d, ..., kd}`. Returns the progression, or the
/// counterexample pair with the largest `larger`, then the largest `smaller`.
pub fn arithmetic_closure(values: &[usize]) -> Result<Closure> {
    let mut b = values.to_vec();
    b.sort_unstable();
    b.dedup();
    if b.is_empty() {
        return Err(Error::PremiseNotMet("the set must be nonempty".into()));
    }
    if b[0] == 0 {
        return Err(Error::PremiseNotMet("members must be positive".into()));
    }
    for x in (1..b.len()).rev() {
        for y in (0..x).rev() {
            if b.binary_search(&(b[x] - b[y])).is_err() {
                return Ok(Closure::Counterexample {
                    larger: b[x],
                    smaller: b[y],
                });
            }
        }
    }
    let step = b[0];
    debug_assert!(b.iter().enumerate().all(|(i, &x)| x == (i + 1) * step));
    Ok(Closure::Progression(Progression {
        step,
        terms: b.len(),
    }))
}

/// Offsets `{t, 2t, ..., kt}`. The order condition `n > kt` always holds for
/// valid parameters.
pub fn is_cocoonery(p: &ToeplitzParams) -> Option<Progression> {
    let step = p.offsets()[0];
    p.offsets()
        .iter()
        .enumerate()
        .all(|(i, &t)| t == (i + 1) * step)
        .then_some(Progression { step, terms: p.k() })
}

/// Offsets `{t, ..., (k-1)t, (k+1)t}` with `k >= 2`: a cocoonery whose
/// largest offset was pushed up by one step. Reports the original `(k, t)`.
pub fn is_mutation(p: &ToeplitzParams) -> Option<Progression> {
    let k = p.k();
    if k < 2 {
        return None;
    }
    let step = p.offsets()[0];
    let (head, last) = p.offsets().split_at(k - 1);
    let head_ok = head.iter().enumerate().all(|(i, &t)| t == (i + 1) * step);
    (head_ok && last[0] == (k + 1) * step).then_some(Progression { step, terms: k })
}

/// A reason, read off the offsets alone, why the graph must contain a claw.
/// Indices are 1-based positions in the offset list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Refutation {
    /// `n > t_k + t_prefix` while `t_bad != bad * t_1` with `bad <= prefix`.
    LongOrder { prefix_len: usize, bad_index: usize },
    /// `t_{gap+1} - t_gap > t_prefix` for some `gap >= prefix`, while
    /// `t_bad != bad * t_1` with `bad <= prefix`.
    WideGap {
        prefix_len: usize,
        gap_index: usize,
        bad_index: usize,
    },
}

impl Refutation {
    pub fn describe(&self, p: &ToeplitzParams) -> String {
        let t = p.offsets();
        match *self {
            Refutation::LongOrder {
                prefix_len,
                bad_index,
            } => format!(
                "n = {} exceeds t_{} + t_{} = {} yet t_{} = {} is not {} * t_1",
                p.n(),
                p.k(),
                prefix_len,
                p.last() + t[prefix_len - 1],
                bad_index,
                t[bad_index - 1],
                bad_index
            ),
            Refutation::WideGap {
                prefix_len,
                gap_index,
                bad_index,
            } => format!(
                "gap t_{} - t_{} = {} exceeds t_{} = {} yet t_{} = {} is not {} * t_1",
                gap_index + 1,
                gap_index,
                t[gap_index] - t[gap_index - 1],
                prefix_len,
                t[prefix_len - 1],
                bad_index,
                t[bad_index - 1],
                bad_index
            ),
        }
    }
}

/// Two necessary conditions for claw-freeness: in a claw-free graph the
/// offsets must start as multiples of `t_1` up to any index `l` with either
/// `n > t_k + t_l`, or a later gap `t_{j+1} - t_j` wider than `t_l`.
/// Sound but incomplete: `None` proves nothing.
pub fn refute_by_offset_conditions(p: &ToeplitzParams) -> Option<Refutation> {
    let t = p.offsets();
    let k = t.len();
    if k < 2 {
        return None;
    }
    // First 1-based index breaking the progression; any prefix reaching it fails.
    let bad = (1..=k).find(|&i| t[i - 1] != i * t[0])?;
    if bad >= k {
        // Only t_k deviates and every prefix must stop before k.
        return None;
    }
    if let Some(prefix_len) = (bad..k).find(|&l| p.n() > t[k - 1] + t[l - 1]) {
        return Some(Refutation::LongOrder {
            prefix_len,
            bad_index: bad,
        });
    }
    for prefix_len in bad..k {
        if let Some(gap_index) = (prefix_len..k).find(|&j| t[j] - t[j - 1] > t[prefix_len - 1]) {
            return Some(Refutation::WideGap {
                prefix_len,
                gap_index,
                bad_index: bad,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, offsets: &[usize]) -> ToeplitzParams {
        ToeplitzParams::new(n, offsets.to_vec()).unwrap()
    }

    #[test]
    fn cocooneries() {
        assert_eq!(
            is_cocoonery(&params(30, &[5, 10, 15])),
            Some(Progression { step: 5, terms: 3 })
        );
        assert_eq!(is_cocoonery(&params(9, &[1, 2, 3, 5, 8])), None);
        assert_eq!(
            is_cocoonery(&params(7, &[3])),
            Some(Progression { step: 3, terms: 1 })
        );
    }

    #[test]
    fn mutations() {
        assert_eq!(
            is_mutation(&params(8, &[1, 2, 3, 5])),
            Some(Progression { step: 1, terms: 4 })
        );
        assert_eq!(is_mutation(&params(30, &[5, 10, 15])), None);
        assert_eq!(
            is_mutation(&params(9, &[2, 6])),
            Some(Progression { step: 2, terms: 2 })
        );
        assert_eq!(is_mutation(&params(9, &[2])), None);
    }

    #[test]
    fn closure() {
        assert_eq!(
            arithmetic_closure(&[3, 6, 9]).unwrap(),
            Closure::Progression(Progression { step: 3, terms: 3 })
        );
        assert_eq!(
            arithmetic_closure(&[1, 3, 8]).unwrap(),
            Closure::Counterexample {
                larger: 8,
                smaller: 3
            }
        );
        assert_eq!(
            arithmetic_closure(&[2]).unwrap(),
            Closure::Progression(Progression { step: 2, terms: 1 })
        );
        assert!(arithmetic_closure(&[]).is_err());
        assert!(arithmetic_closure(&[0, 1]).is_err());
    }

    #[test]
    fn refutations() {
        assert_eq!(
            refute_by_offset_conditions(&params(14, &[1, 2, 3, 5, 8, 13])),
            None
        );
        assert_eq!(
            refute_by_offset_conditions(&params(20, &[1, 3, 5])),
            Some(Refutation::LongOrder {
                prefix_len: 2,
                bad_index: 2
            })
        );
        assert_eq!(refute_by_offset_conditions(&params(6, &[1, 2, 3])), None);
        assert_eq!(refute_by_offset_conditions(&params(6, &[2])), None);
        // Gap 9 - 3 = 6 exceeds t_2 = 3 while t_2 != 2 t_1.
        assert_eq!(
            refute_by_offset_conditions(&params(12, &[1, 3, 9, 10])),
            Some(Refutation::WideGap {
                prefix_len: 2,
                gap_index: 2,
                bad_index: 2
            })
        );
    }
}
