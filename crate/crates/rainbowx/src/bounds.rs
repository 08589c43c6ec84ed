//! Ramsey upper bounds, the sphere independence-number recursion, and
//! the layered-coloring constant. All arithmetic is arbitrary precision:
//! these constants blow up even for the smallest parameters.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Parameters (r, s, l) of a forbidden triple {K_{1,r}, K_s^h, P_l}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundParams {
    pub r: u32,
    pub s: u32,
    pub ell: u32,
}

impl BoundParams {
    pub fn new(r: u32, s: u32, ell: u32) -> Result<Self> {
        if r < 3 || s < 3 {
            return Err(Error::InputDomain(format!(
                "bound params require r, s >= 3, got r={r} s={s}"
            )));
        }
        if ell < 5 {
            return Err(Error::InputDomain(format!(
                "bound params require l > 4, got l={ell}"
            )));
        }
        Ok(BoundParams { r, s, ell })
    }
}

fn binomial(n: &BigUint, k: &BigUint) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let smaller = (k.clone()).min(n - k);
    let steps: u64 = (&smaller)
        .try_into()
        .expect("binomial side exceeds u64; parameters out of any practical range");
    let mut acc = BigUint::one();
    for j in 1..=steps {
        acc = acc * (n - &smaller + j) / j;
    }
    acc
}

/// Erdos-Szekeres upper bound on the Ramsey number:
/// `R(a, b) <= binomial(a + b - 2, a - 1)`. Symmetric in its arguments
/// and satisfies the Pascal relation with equality, so every inequality
/// derived from R stays valid when this bound is substituted.
pub fn ramsey_upper(a: &BigUint, b: &BigUint) -> BigUint {
    assert!(!a.is_zero() && !b.is_zero(), "ramsey_upper needs a, b >= 1");
    let two = BigUint::from(2u32);
    binomial(&(a + b - two), &(a - 1u32))
}

pub fn ramsey_upper_u64(a: u64, b: u64) -> BigUint {
    ramsey_upper(&BigUint::from(a), &BigUint::from(b))
}

fn memo() -> &'static Mutex<HashMap<(u32, u32, u32), BigUint>> {
    static MEMO: OnceLock<Mutex<HashMap<(u32, u32, u32), BigUint>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Strict upper bound on the sphere independence number at distance `i`
/// around any vertex of a connected (K_{1,r}, K_s^h)-free graph:
/// `alpha0(r,s,1) = r` and
/// `alpha0(r,s,i) = (r-2) * R_upper(s(2r-3), alpha0(r,s,i-1))` for i >= 2.
pub fn alpha0_bound(r: u32, s: u32, i: u32) -> BigUint {
    assert!(r >= 3 && s >= 3 && i >= 1, "alpha0_bound needs r,s >= 3, i >= 1");
    if let Some(v) = memo().lock().unwrap().get(&(r, s, i)) {
        return v.clone();
    }
    let value = if i == 1 {
        BigUint::from(r)
    } else {
        let prev = alpha0_bound(r, s, i - 1);
        let a = BigUint::from(s as u64 * (2 * r as u64 - 3));
        BigUint::from(r - 2) * ramsey_upper(&a, &prev)
    };
    memo().lock().unwrap().insert((r, s, i), value.clone());
    value
}

/// The additive constant for (K_{1,r}, K_s^h, P_l)-free graphs:
/// `C(r,s,l) = (r-2) * (Rsum + 1) + 2(l-1)` where `Rsum` sums
/// `R_upper(s(2r-3), alpha0(r,s,i-1))` for i = 2..=l-2 (a central vertex
/// has eccentricity at most l-2, so the sum covers every layer).
pub fn steiner_rainbow_constant(p: &BoundParams) -> BigUint {
    let a = BigUint::from(p.s as u64 * (2 * p.r as u64 - 3));
    let mut rsum = BigUint::zero();
    for i in 2..=(p.ell - 2) {
        rsum += ramsey_upper(&a, &alpha0_bound(p.r, p.s, i - 1));
    }
    BigUint::from(p.r - 2) * (rsum + 1u32) + BigUint::from(2 * (p.ell - 1))
}
