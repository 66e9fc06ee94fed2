#![allow(dead_code)]

use lozenge::region::DentedHexParams;
use proptest::prelude::*;

/// Valid dented hexagons with `a <= max_a`, `1 <= b, c <= max_side` and at most
/// `max_dents` dents in total; `extra_t` is added to `t = m + n`.
pub fn params(max_a: u32, max_side: u32, max_dents: u32, extra_t: u32) -> impl Strategy<Value = DentedHexParams> {
    (0..=max_a, 1..=max_side, 1..=max_side, 0..=max_dents)
        .prop_flat_map(move |(a, b, c, k)| (Just(a), Just(b), Just(c), Just(k), 0..=k))
        .prop_flat_map(move |(a, b, c, k, m)| {
            let t = k + extra_t;
            let ne: Vec<u32> = (1..=b + t).collect();
            let nw: Vec<u32> = (1..=c + t).collect();
            (
                Just((a, b, c, t)),
                proptest::sample::subsequence(ne, m as usize),
                proptest::sample::subsequence(nw, (k - m) as usize),
            )
        })
        .prop_filter_map("ill-defined", |((a, b, c, t), u, v)| DentedHexParams::new(a, b, c, t, u, v).ok())
}

pub fn balanced(max_a: u32, max_side: u32, max_dents: u32) -> impl Strategy<Value = DentedHexParams> {
    params(max_a, max_side, max_dents, 0)
}
