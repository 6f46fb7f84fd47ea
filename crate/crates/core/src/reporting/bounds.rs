use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Orbit-counting lower bounds `⌈2^(2^n) / 6^n⌉` and `⌈2^(2^n) / (6^n n!)⌉`
/// for the small and large groups.
pub fn lower_bounds(n: u8) -> Result<(BigUint, BigUint)> {
    if !(3..=6).contains(&n) {
        return Err(Error::UnsupportedShape {
            n,
            reason: "lower bounds are tabulated for n = 3..=6",
        });
    }
    let arrays = BigUint::from(1u8) << (1usize << n);
    let small_order = BigUint::from(6u8).pow(u32::from(n));
    let factorial: BigUint = (1..=u32::from(n)).map(BigUint::from).product();
    let large_order = &small_order * factorial;
    Ok((arrays.div_ceil(&small_order), arrays.div_ceil(&large_order)))
}
