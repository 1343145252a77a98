use std::f64::consts::PI;

/// Segment lengths of the clasp at fold angle π/3, derived from the clasp
/// triangles rather than quoted.
///
/// `P` is where the ribbon leaving the last half-wrap meets the line one
/// width above the folded edge; it continues to `N`, turns by π/6 and runs
/// straight down through `M` (directly above `U`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClaspDistances {
    /// Ribbon length from `M` back along the knot to `P`, through `N`.
    pub dk_mp: f64,
    /// Planar distance between `P` and `M`.
    pub d_pm: f64,
    pub d_jt: f64,
    /// Height of `N` above `M`.
    pub d_mn: f64,
    /// Ribbon length from `P` to `N`.
    pub d_np: f64,
}

pub fn clasp_distances() -> ClaspDistances {
    // the π/6 fold at N bisects a right angle into π/12 either side of the
    // half-width segment M Q
    let d_mn = 0.5 * (PI / 12.0).tan();
    // P N climbs at angle π/3 to the folded edge
    let d_np = d_mn / (PI / 6.0).cos();
    let d_pm = d_mn / (PI / 3.0).tan();
    let d_jt = 0.5 / (PI / 3.0).tan();
    ClaspDistances { dk_mp: d_mn + d_np, d_pm, d_jt, d_mn, d_np }
}
