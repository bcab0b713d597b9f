#![allow(dead_code)]

pub mod naive;

use topocheck::explorer::enumerate_topologies;
use topocheck::space::{parse_space_json, SpaceContext, Topology};
use topocheck::SubsetMask;

/// Every labeled topology with `1 ≤ n ≤ max_n`, from the enumerator.
pub fn spaces_up_to(max_n: usize) -> Vec<Topology> {
    (1..=max_n)
        .flat_map(|n| enumerate_topologies(n, false).unwrap())
        .collect()
}

/// Topologies on `n` points found by filtering every family of subsets
/// that contains ∅ and X. Independent of the preorder enumerator.
pub fn brute_force_topologies(n: usize) -> Vec<Vec<u16>> {
    let full = ((1u32 << n) - 1) as u16;
    let inner: Vec<u16> = (1..full).collect();
    let mut out = Vec::new();
    for pick in 0u64..1 << inner.len() {
        let mut fam = vec![0u16, full];
        fam.extend(inner.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, &a)| a));
        let closed = fam
            .iter()
            .all(|&a| fam.iter().all(|&b| fam.contains(&(a | b)) && fam.contains(&(a & b))));
        if closed {
            fam.sort_unstable();
            out.push(fam);
        }
    }
    out
}

pub fn open_bits(t: &Topology) -> Vec<u16> {
    t.opens().map(|m| m.bits()).collect()
}

pub fn masks(n: usize) -> Vec<SubsetMask> {
    (0..1u32 << n).map(|a| SubsetMask::new(a as u16, n)).collect()
}

pub fn space(json: &str) -> SpaceContext {
    SpaceContext::new(parse_space_json(json).unwrap())
}

pub const THREE_POINT: &str = r#"{"points":["k","l","m"],"opens":[[],["k"],["l"],["k","l"],["k","l","m"]]}"#;
pub const FOUR_POINT: &str =
    r#"{"points":["k","l","m","n"],"opens":[[],["l"],["m"],["l","m"],["m","n"],["k","l","m"],["l","m","n"],["k","l","m","n"]]}"#;
pub const THREE_POINT_SPLIT: &str = r#"{"points":["k","l","m"],"opens":[[],["k"],["l","m"],["k","l","m"]]}"#;
pub const SIERPINSKI: &str = r#"{"points":["a","b"],"opens":[[],["a"],["a","b"]]}"#;

/// Mask over the points of `ctx` named in `names`.
pub fn set(ctx: &SpaceContext, names: &[&str]) -> SubsetMask {
    let t = ctx.topology();
    SubsetMask::from_points(
        names
            .iter()
            .map(|n| t.point_names().iter().position(|p| p == n).expect("known point")),
        t.n(),
    )
}
