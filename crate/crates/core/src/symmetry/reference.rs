//! Cell-by-cell group actions and orbits by enumerating every group element.
//!
//! Slow, but written directly against subscript tuples. Used to cross-check
//! the bit-mask actions and the generator closure in [`super`].

use std::collections::BTreeSet;

use crate::array::{flatten, unflatten, ArrayCode};
use crate::error::{Error, Result};

use super::{AxisPermutation, GroupElement};

/// For each fixed choice of the other subscripts, replaces the column
/// `[y_{..1..}, y_{..2..}]` along `direction` by `g` times it.
pub fn act_axis_by_cells(g: GroupElement, a: ArrayCode, direction: usize) -> Result<ArrayCode> {
    let shape = a.shape();
    let n = shape.n() as usize;
    if !(1..=n).contains(&direction) {
        return Err(Error::InvalidDirection {
            direction,
            n: shape.n(),
        });
    }
    let y = unflatten(a);
    let mut z = y.clone();
    for (subscript, _) in y.iter().filter(|(s, _)| s[direction - 1] == 1) {
        let mut other = subscript.clone();
        other[direction - 1] = 2;
        let w = g.apply([y[subscript], y[&other]]);
        z.insert(subscript.clone(), w[0]);
        z.insert(other, w[1]);
    }
    flatten(z, shape)
}

/// `z_{i_1..i_n} = y_{i_p(1)..i_p(n)}`.
pub fn act_permutation_by_cells(p: &AxisPermutation, a: ArrayCode) -> Result<ArrayCode> {
    let shape = a.shape();
    if p.len() != shape.n() as usize {
        return Err(Error::Malformed(
            "permutation length does not match n".into(),
        ));
    }
    let y = unflatten(a);
    let z = y.keys().map(|m| {
        let source: Vec<u8> = p.images().iter().map(|&j| m[j as usize - 1]).collect();
        (m.clone(), y[&source])
    });
    flatten(z.collect::<Vec<_>>(), shape)
}

/// Applies every tuple `(g_1, …, g_n)` of `GL2(F2)` elements, direction by
/// direction.
pub fn enumerate_small_orbit(a: ArrayCode) -> Result<BTreeSet<ArrayCode>> {
    let mut layer = BTreeSet::from([a]);
    for direction in 1..=a.shape().n() as usize {
        let mut next = BTreeSet::new();
        for &x in &layer {
            for g in GroupElement::ALL {
                next.insert(act_axis_by_cells(g, x, direction)?);
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// Union of the small orbits of every direction permutation of `a`.
pub fn enumerate_large_orbit(a: ArrayCode) -> Result<BTreeSet<ArrayCode>> {
    let mut out = BTreeSet::new();
    for p in AxisPermutation::all(a.shape().n()) {
        out.extend(enumerate_small_orbit(act_permutation_by_cells(&p, a)?)?);
    }
    Ok(out)
}
