//! Central charges and Kac-table weights in the `t` parametrization.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{int, rat, Rational};

fn nonzero(t: &Rational) -> Result<()> {
    if t.is_zero() {
        return Err(Error::Domain("t must be non-zero".into()));
    }
    Ok(())
}

/// `c = 13 - 6t - 6/t`.
pub fn central_charge_from_t(t: &Rational) -> Result<Rational> {
    nonzero(t)?;
    Ok(int(13) - int(6) * t - int(6) / t)
}

/// `h_{r,s}(t) = (r²-1)t/4 - (rs-1)/2 + (s²-1)/(4t)`.
pub fn h_rs(t: &Rational, r: i64, s: i64) -> Result<Rational> {
    nonzero(t)?;
    Ok(int(r * r - 1) * t / int(4) - int(r * s - 1) / int(2) + int(s * s - 1) / (int(4) * t))
}

/// `h_{r,1}` at `c = 25`, i.e. `t = -1`: `1 - (r+1)²/4`.
pub fn h_r1_c25(r: i64) -> Rational {
    int(1) - rat((r + 1) * (r + 1), 4)
}

/// `h_{r,1}` at `c = 1`, i.e. `t = 1`: `(r-1)²/4`.
pub fn h_r1_c1(r: i64) -> Rational {
    rat((r - 1) * (r - 1), 4)
}
