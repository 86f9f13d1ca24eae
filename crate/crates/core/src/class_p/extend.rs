//! Extending boundary colors across a freshly pasted configuration.
//!
//! Each extender receives the pairs already sitting on the two boundary
//! edges and returns one pair per template edge (boundary edges included),
//! in the gadget's edge order. Fresh pairs are always the two smallest
//! palette colors not yet constrained.

use alloc::vec;
use alloc::vec::Vec;

use super::gadget::{GadgetKind, Template};
use crate::graph::{Color, ColorPair};
use crate::{Error, Result};

/// The two smallest colors of `1..=palette` outside every pair in `taken`.
pub fn fresh_pair(palette: Color, taken: &[ColorPair]) -> Result<ColorPair> {
    let mut free = (1..=palette).filter(|&c| taken.iter().all(|p| !p.contains(c)));
    match (free.next(), free.next()) {
        (Some(a), Some(b)) => Ok(ColorPair::new(a, b).expect("distinct colors")),
        _ => Err(Error::PaletteExhausted { palette }),
    }
}

fn disjoint(p1: ColorPair, p2: ColorPair) -> Result<()> {
    if p1.is_disjoint(p2) {
        Ok(())
    } else {
        Err(Error::OverlappingPairs)
    }
}

/// `G2` with `p1` on `vx` and `p2` on `wy`: `uv = p2`, `uw = p1`, `vw` fresh.
pub fn extend_g2(p1: ColorPair, p2: ColorPair, palette: Color) -> Result<Vec<ColorPair>> {
    disjoint(p1, p2)?;
    let q = fresh_pair(palette, &[p1, p2])?;
    // uv, uw, vw, vx, wy
    Ok(vec![p2, p1, q, p1, p2])
}

/// `G4` with `p1` on `u1x` and `p2` on `v1y`: `u0v1 = v0w = p1`,
/// `u0w = u1v0 = p2`, `u0u1 = v0v1` fresh.
pub fn extend_g4(p1: ColorPair, p2: ColorPair, palette: Color) -> Result<Vec<ColorPair>> {
    disjoint(p1, p2)?;
    let q = fresh_pair(palette, &[p1, p2])?;
    // u0u1, u0v1, u0w, u1v0, v0v1, v0w, u1x, v1y
    Ok(vec![q, p1, p2, p2, q, p1, p1, p2])
}

/// `G8` with `p1` on `u2x` and `p2` on `v1y`: `v0v1 = u0u1 = p1`,
/// `u0v0 = u1u2 = p2`, `u0v1 = u2v0` fresh.
pub fn extend_g8(p1: ColorPair, p2: ColorPair, palette: Color) -> Result<Vec<ColorPair>> {
    disjoint(p1, p2)?;
    let q = fresh_pair(palette, &[p1, p2])?;
    // u0u1, u1u2, u0v0, u0v1, v0v1, u2v0, u2x, v1y
    Ok(vec![p1, p2, p2, q, p1, q, p1, p2])
}

/// `H_t` whose two top rails `x_{t-1}x_t` and `y_{t-1}y_t` carry the same
/// pair.
///
/// Walking down the ladder, each lower pair of rails takes a pair fresh with
/// respect to the rails above, and the rung between them a pair fresh with
/// respect to both. The head then gets `x'y'` equal to the bottom rails,
/// while `x'y0, x0y'` and `x'x0, y'y0` take the two remaining fresh pairs.
pub fn extend_h(
    t: usize,
    rail_x: ColorPair,
    rail_y: ColorPair,
    palette: Color,
) -> Result<Vec<ColorPair>> {
    if t == 0 {
        return Err(Error::InvalidGadget);
    }
    if rail_x != rail_y {
        return Err(Error::UnequalRailPairs);
    }
    // rails[i] colors x_i x_{i+1} and y_i y_{i+1}; rungs[i] colors x_i y_i.
    let mut rails = vec![rail_x; t];
    let mut rungs = vec![None; t];
    for i in (1..t).rev() {
        let below = fresh_pair(palette, &[rails[i]])?;
        rungs[i] = Some(fresh_pair(palette, &[rails[i], below])?);
        rails[i - 1] = below;
    }
    let base = rails[0];
    let cross = fresh_pair(palette, &[base])?;
    let side = fresh_pair(palette, &[base, cross])?;
    // x'y', x'y0, x0y', x'x0, y'y0
    let mut out = vec![base, cross, cross, side, side];
    for i in 0..t {
        out.push(rails[i]);
        out.push(rails[i]);
        if i + 1 < t {
            out.push(rungs[i + 1].expect("set for every inner rung"));
        }
    }
    Ok(out)
}

/// Dispatches on `kind`; `boundary` holds the pairs on the two boundary
/// edges in template order.
pub fn extend(kind: GadgetKind, boundary: [ColorPair; 2], palette: Color) -> Result<Vec<ColorPair>> {
    let [p1, p2] = boundary;
    let out = match kind {
        GadgetKind::G2 => extend_g2(p1, p2, palette)?,
        GadgetKind::G4 => extend_g4(p1, p2, palette)?,
        GadgetKind::G8 => extend_g8(p1, p2, palette)?,
        GadgetKind::H(t) => extend_h(t, p1, p2, palette)?,
    };
    debug_assert_eq!(out.len(), Template::of(kind).map(|t| t.edges.len()).unwrap_or(0));
    Ok(out)
}
