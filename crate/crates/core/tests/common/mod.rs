#![allow(dead_code)]

use rand::Rng;
use rimhook_core::{GrassmannContext, Partition};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn ctx(l: usize, k: usize) -> GrassmannContext {
    GrassmannContext::new(l, k).unwrap()
}

/// Random partition with at most `max_len` parts, each at most `max_part`.
pub fn random_partition(rng: &mut impl Rng, max_part: usize, max_len: usize) -> Partition {
    let len = rng.gen_range(0..=max_len);
    let mut parts: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=max_part.max(1))).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

pub fn random_in_rect(rng: &mut impl Rng, ctx: GrassmannContext) -> Partition {
    random_partition(rng, ctx.k(), ctx.l())
}

/// Contexts with `1 ≤ l, k` and `l + k ≤ max_n`.
pub fn contexts_up_to(max_n: usize) -> Vec<GrassmannContext> {
    let mut out = Vec::new();
    for l in 1..max_n {
        for k in 1..=max_n - l {
            out.push(ctx(l, k));
        }
    }
    out
}
