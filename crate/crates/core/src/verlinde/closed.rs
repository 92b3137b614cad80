//! Closed forms for the low-level Verlinde numbers, as plain big-integer
//! expressions.
//!
//! These share no arithmetic with the cyclotomic evaluation beyond the
//! big-integer substrate, which is what makes them useful as the reference
//! side of regression checks.

use super::VerlindeError;
use crate::exact_arith::BigInt;

/// The named closed forms. `g` is the genus; `n` indexes the spin groups as
/// Spin_2n / Spin_2n+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormula {
    /// N_1(SL_2) = 2^g
    N1Sl2 { g: u32 },
    /// N_2(SL_2) = 2^(g-1) (2^g + 1)
    N2Sl2 { g: u32 },
    /// N_1(SL_4) = 2^(2g)
    N1Sl4 { g: u32 },
    /// N_2(SL_4) = 2^(3g-1) 3^(g-1) + 2^(3g-1) + 2^g 3^(g-1)
    N2Sl4 { g: u32 },
    /// N_1(Spin_2n) = 2^(2g)
    N1SpinEven { n: u32, g: u32 },
    /// N_2(Spin_2n) = (2n)^g + (2^(2g) - 1)(2n)^(g-1) + 2^(g-1)(2^(2g) - n^g)
    N2SpinEven { n: u32, g: u32 },
    /// N_1(Spin_2n+1) = 2^(g-1) (2^g + 1)
    N1SpinOdd { n: u32, g: u32 },
    /// N_2(Spin_2n+1) = 2^(2g-1)(2n+1)^(g-1) + n(2n+1)^(g-1) + 2^(2g-1)
    N2SpinOdd { n: u32, g: u32 },
    /// 2 N_2^-(Spin_2n+1) = (2n+1)^g + (2^(2g) - 1)(2n+1)^(g-1);
    /// at n = 1 the left-hand side is 2 N_4^-(Spin_3).
    TwiceSplitMinusSpinOdd { n: u32, g: u32 },
    /// -N^+ + N^- = 2^(2g-1)(2n+1)^(g-1) + n(2n+1)^(g-1) - 2^(2g-1),
    /// at the level of the orthogonal representation (4 for n = 1, else 2).
    SplitDifferenceSpinOdd { n: u32, g: u32 },
}

fn pow(base: u32, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// Evaluate a closed form. Errors if the parameters are outside the formula's
/// stated range (g >= 1 everywhere; n >= 2 for the even spin forms, n >= 1
/// for the odd ones, where n = 1 is the Spin_3 = SL_2 convention).
pub fn closed_form(formula: ClosedFormula) -> Result<BigInt, VerlindeError> {
    use ClosedFormula::*;
    let check = |n_ok: bool, g: u32, what: &str| -> Result<(), VerlindeError> {
        if !n_ok || g < 1 {
            Err(VerlindeError::InvalidQuery(format!(
                "{what} outside the formula's parameter range"
            )))
        } else {
            Ok(())
        }
    };
    Ok(match formula {
        N1Sl2 { g } => {
            check(true, g, "N_1(SL_2)")?;
            pow(2, g)
        }
        N2Sl2 { g } => {
            check(true, g, "N_2(SL_2)")?;
            pow(2, g - 1) * (pow(2, g) + 1)
        }
        N1Sl4 { g } => {
            check(true, g, "N_1(SL_4)")?;
            pow(2, 2 * g)
        }
        N2Sl4 { g } => {
            check(true, g, "N_2(SL_4)")?;
            pow(2, 3 * g - 1) * pow(3, g - 1) + pow(2, 3 * g - 1) + pow(2, g) * pow(3, g - 1)
        }
        N1SpinEven { n, g } => {
            check(n >= 2, g, "N_1(Spin_2n)")?;
            pow(2, 2 * g)
        }
        N2SpinEven { n, g } => {
            check(n >= 2, g, "N_2(Spin_2n)")?;
            pow(2 * n, g)
                + (pow(2, 2 * g) - 1) * pow(2 * n, g - 1)
                + pow(2, g - 1) * (pow(2, 2 * g) - pow(n, g))
        }
        N1SpinOdd { n, g } => {
            check(n >= 1, g, "N_1(Spin_2n+1)")?;
            pow(2, g - 1) * (pow(2, g) + 1)
        }
        N2SpinOdd { n, g } => {
            check(n >= 1, g, "N_2(Spin_2n+1)")?;
            pow(2, 2 * g - 1) * pow(2 * n + 1, g - 1)
                + BigInt::from(n) * pow(2 * n + 1, g - 1)
                + pow(2, 2 * g - 1)
        }
        TwiceSplitMinusSpinOdd { n, g } => {
            check(n >= 1, g, "2 N_2^-(Spin_2n+1)")?;
            pow(2 * n + 1, g) + (pow(2, 2 * g) - 1) * pow(2 * n + 1, g - 1)
        }
        SplitDifferenceSpinOdd { n, g } => {
            check(n >= 1, g, "-N^+ + N^-")?;
            pow(2, 2 * g - 1) * pow(2 * n + 1, g - 1)
                + BigInt::from(n) * pow(2 * n + 1, g - 1)
                - pow(2, 2 * g - 1)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(f: ClosedFormula) -> i64 {
        use num_traits::ToPrimitive;
        closed_form(f).unwrap().to_i64().unwrap()
    }

    #[test]
    fn instantiations_at_small_genus() {
        use ClosedFormula::*;
        assert_eq!(eval(N1Sl2 { g: 2 }), 4);
        assert_eq!(eval(N2Sl2 { g: 2 }), 10);
        assert_eq!(eval(N1Sl4 { g: 2 }), 16);
        // 2^5 * 3 + 2^5 + 2^2 * 3
        assert_eq!(eval(N2Sl4 { g: 2 }), 140);
        assert_eq!(eval(N1SpinEven { n: 4, g: 2 }), 16);
        // 8^2 + 15 * 8 + 2 * (16 - 16): the tail vanishes at n = 4.
        assert_eq!(eval(N2SpinEven { n: 4, g: 2 }), 184);
        assert_eq!(eval(N1SpinOdd { n: 3, g: 2 }), 10);
        assert_eq!(eval(N2SpinOdd { n: 3, g: 2 }), 85);
        assert_eq!(eval(TwiceSplitMinusSpinOdd { n: 2, g: 2 }), 100);
        // 2^3 * 3 + 1 * 3 - 2^3
        assert_eq!(eval(SplitDifferenceSpinOdd { n: 1, g: 2 }), 19);
    }

    #[test]
    fn split_forms_are_consistent_with_each_other() {
        // -N+ + N- = 2N- - N, as big-integer identities.
        use ClosedFormula::*;
        for n in 1..=5 {
            for g in 1..=6 {
                let total = closed_form(N2SpinOdd { n, g }).unwrap();
                let twice_minus = closed_form(TwiceSplitMinusSpinOdd { n, g }).unwrap();
                let diff = closed_form(SplitDifferenceSpinOdd { n, g }).unwrap();
                assert_eq!(diff, twice_minus - total);
            }
        }
    }

    #[test]
    fn parameter_ranges_are_enforced() {
        use ClosedFormula::*;
        assert!(closed_form(N2SpinEven { n: 1, g: 2 }).is_err());
        assert!(closed_form(N2SpinOdd { n: 0, g: 2 }).is_err());
        assert!(closed_form(N1Sl2 { g: 0 }).is_err());
    }
}
