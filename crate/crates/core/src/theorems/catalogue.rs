//! Complete lists of claw-free three-offset graphs at two special orders.

use serde::Serialize;

use crate::graph::ToeplitzParams;

/// The families of claw-free `T_n<t_1, t_2, t_3>` with `n = 2 t_3 - i`,
/// `i` in `{1, 2, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NearDoubleFamily {
    /// `<t, 2t, 3t>` on `6t - i` vertices.
    Cocoonery,
    /// `<j, t_3 - j, t_3>` with `j <= i`.
    SplitLast,
    /// `T_7<2,4,5>`, `T_6<1,2,4>`, `T_5<1,2,4>`.
    SporadicDoubledSecond,
    /// `T_6<2,3,4>`, `T_5<2,3,4>`, `T_9<3,5,6>`.
    SporadicDoubledLast,
}

const SPORADIC_SECOND: [(usize, [usize; 3]); 3] = [(7, [2, 4, 5]), (6, [1, 2, 4]), (5, [1, 2, 4])];
const SPORADIC_LAST: [(usize, [usize; 3]); 3] = [(6, [2, 3, 4]), (5, [2, 3, 4]), (9, [3, 5, 6])];

/// `Some(i)` when `p` has three offsets and `n = 2 t_3 - i` for `i` in `{1, 2, 3}`.
pub fn near_double_gap(p: &ToeplitzParams) -> Option<usize> {
    if p.k() != 3 {
        return None;
    }
    let double = 2 * p.last();
    (double > p.n())
        .then(|| double - p.n())
        .filter(|i| (1..=3).contains(i))
}

/// The family `p` belongs to, or `None` when it is in none of them (or is
/// not of the form `n = 2 t_3 - i`). Membership is exactly claw-freeness.
pub fn near_double_family(p: &ToeplitzParams) -> Option<NearDoubleFamily> {
    let i = near_double_gap(p)?;
    let n = p.n();
    let t: [usize; 3] = p.offsets().try_into().ok()?;
    let [t1, t2, t3] = t;
    if t2 == 2 * t1 && t3 == 3 * t1 {
        return Some(NearDoubleFamily::Cocoonery);
    }
    if t1 <= i && t1 + t2 == t3 {
        return Some(NearDoubleFamily::SplitLast);
    }
    if SPORADIC_SECOND.contains(&(n, t)) {
        return Some(NearDoubleFamily::SporadicDoubledSecond);
    }
    if SPORADIC_LAST.contains(&(n, t)) {
        return Some(NearDoubleFamily::SporadicDoubledLast);
    }
    None
}

/// For three offsets and `n = t_3 + 1`: claw-free exactly when
/// `t_1 + t_2 = t_3`, `t_2 = 2 t_1` or `t_3 = 2 t_1`.
pub fn just_above_last(p: &ToeplitzParams) -> Option<bool> {
    if p.k() != 3 || p.n() != p.last() + 1 {
        return None;
    }
    let t = p.offsets();
    Some(t[0] + t[1] == t[2] || t[1] == 2 * t[0] || t[2] == 2 * t[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, offsets: &[usize]) -> ToeplitzParams {
        ToeplitzParams::new(n, offsets.to_vec()).unwrap()
    }

    #[test]
    fn families() {
        assert_eq!(
            near_double_family(&params(11, &[2, 4, 6])),
            Some(NearDoubleFamily::Cocoonery)
        );
        assert_eq!(
            near_double_family(&params(16, &[2, 7, 9])),
            Some(NearDoubleFamily::SplitLast)
        );
        assert_eq!(
            near_double_family(&params(17, &[1, 8, 9])),
            Some(NearDoubleFamily::SplitLast)
        );
        // j = 3 needs i = 3.
        assert_eq!(
            near_double_family(&params(16, &[3, 6, 9])),
            Some(NearDoubleFamily::Cocoonery)
        );
        assert_eq!(near_double_family(&params(18, &[3, 7, 10])), None);
        assert_eq!(
            near_double_family(&params(17, &[3, 7, 10])),
            Some(NearDoubleFamily::SplitLast)
        );
        for (n, t) in SPORADIC_SECOND {
            assert_eq!(
                near_double_family(&params(n, &t)),
                Some(NearDoubleFamily::SporadicDoubledSecond)
            );
        }
        for (n, t) in SPORADIC_LAST {
            assert_eq!(
                near_double_family(&params(n, &t)),
                Some(NearDoubleFamily::SporadicDoubledLast)
            );
        }
        assert_eq!(near_double_family(&params(30, &[1, 2, 3])), None);
        assert_eq!(near_double_gap(&params(30, &[5, 10, 15])), None);
    }

    #[test]
    fn boundary() {
        assert_eq!(just_above_last(&params(8, &[2, 5, 7])), Some(true));
        assert_eq!(just_above_last(&params(8, &[1, 3, 7])), Some(false));
        assert_eq!(just_above_last(&params(9, &[2, 5, 7])), None);
    }
}
