//! Global variable layout shared by every encoding in one kernel.
//!
//! Source codes `x̄`, target codes `ȳ` and destination positions `z̄` live in
//! disjoint index ranges, `x̄ < ȳ < z̄` in the order. Fixing the bases means a
//! successor function over `z̄` built by the quotient routine and one built by
//! the layered representation are the same handle when they are the same
//! function.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::MAX_WIDTH;
use crate::obdd::VarId;

pub const X_BASE: u32 = 0;
pub const Y_BASE: u32 = MAX_WIDTH;
pub const Z_BASE: u32 = 2 * MAX_WIDTH;

pub fn x(i: u32) -> VarId {
    debug_assert!(i < MAX_WIDTH);
    VarId(X_BASE + i)
}

pub fn y(i: u32) -> VarId {
    debug_assert!(i < MAX_WIDTH);
    VarId(Y_BASE + i)
}

pub fn z(i: u32) -> VarId {
    VarId(Z_BASE + i)
}

pub fn xs(width: u32) -> Vec<VarId> {
    (0..width).map(x).collect()
}

pub fn ys(width: u32) -> Vec<VarId> {
    (0..width).map(y).collect()
}

pub fn zs(width: u32) -> Vec<VarId> {
    (0..width).map(z).collect()
}

/// 1-based display name (`x1`, `y2`, `z1`, ...).
pub fn name(v: VarId) -> String {
    let i = v.0;
    if i < Y_BASE {
        format!("x{}", i - X_BASE + 1)
    } else if i < Z_BASE {
        format!("y{}", i - Y_BASE + 1)
    } else {
        format!("z{}", i - Z_BASE + 1)
    }
}
