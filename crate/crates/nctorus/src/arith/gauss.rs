//! Gaussian rationals ℚ(i), backed by `num_complex::Complex<Rat>`.

use super::rat::{fmt_rat, fmt_rat_abs, rat_int, Rat};
use num_complex::Complex;
use num_traits::{One, Signed, Zero};

/// `re + i·im` with exact rational parts.
pub type GaussRat = Complex<Rat>;

pub fn gauss(re: Rat, im: Rat) -> GaussRat {
    Complex::new(re, im)
}

pub fn gauss_real(re: Rat) -> GaussRat {
    Complex::new(re, Rat::zero())
}

pub fn gauss_zero() -> GaussRat {
    Complex::new(Rat::zero(), Rat::zero())
}

pub fn gauss_one() -> GaussRat {
    Complex::new(Rat::one(), Rat::zero())
}

/// The imaginary unit.
pub fn gauss_i() -> GaussRat {
    Complex::new(Rat::zero(), rat_int(1))
}

pub fn is_real(z: &GaussRat) -> bool {
    z.im.is_zero()
}

/// Formats a coefficient: `3/2`, `-i`, `1/2 i`, `(1/2 + 3/2 i)`.
pub fn fmt_gauss(z: &GaussRat) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => fmt_rat(&z.re),
        (true, false) => fmt_imag(&z.im),
        (false, false) => {
            let sign = if z.im.is_negative() { '-' } else { '+' };
            let mag = if z.im.abs().is_one() { "i".to_string() } else { format!("{} i", fmt_rat_abs(&z.im)) };
            format!("({} {} {})", fmt_rat(&z.re), sign, mag)
        }
    }
}

fn fmt_imag(im: &Rat) -> String {
    let sign = if im.is_negative() { "-" } else { "" };
    if im.abs().is_one() {
        format!("{sign}i")
    } else {
        format!("{sign}{} i", fmt_rat_abs(im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn i_squared_is_minus_one() {
        let i = gauss_i();
        assert_eq!(&i * &i, gauss_real(rat_int(-1)));
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_gauss(&gauss_real(rat(3, 2))), "3/2");
        assert_eq!(fmt_gauss(&gauss(Rat::zero(), rat_int(-1))), "-i");
        assert_eq!(fmt_gauss(&gauss(rat(1, 2), rat(3, 2))), "(1/2 + 3/2 i)");
    }
}
