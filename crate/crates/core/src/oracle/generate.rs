//! Seeded generators of ordinal sets homogeneous for the tuple partitions.
//!
//! Every generator builds its sets from an explicit last-difference
//! pattern; callers still re-check homogeneity with the real coloring.

use rand::Rng;

use crate::ordinal::Ordinal;

/// A random ordinal below `eps_m` with pseudonorm at most 2.
pub fn random_small<R: Rng>(m: i32, rng: &mut R) -> Ordinal {
    if m <= -1 {
        return Ordinal::nat(rng.gen_range(0..=2));
    }
    // Below eps_m with pseudonorm <= 2 means a polynomial in eps_{m-1}
    // with exponents and coefficients of the same kind one level down.
    let n = rng.gen_range(0..=3);
    let mut exps: Vec<Ordinal> = (0..n).map(|_| random_small(m - 1, rng)).collect();
    exps.sort_by(|a, b| b.cmp(a));
    exps.dedup();
    let parts: Vec<(i32, Ordinal, Ordinal)> = exps
        .into_iter()
        .map(|e| (m - 1, e, nonzero_small(m - 1, rng)))
        .collect();
    let out = Ordinal::normalize(&parts).expect("levels are valid");
    if out.psn() <= 2 {
        out
    } else {
        Ordinal::ONE
    }
}

fn nonzero_small<R: Rng>(m: i32, rng: &mut R) -> Ordinal {
    loop {
        let x = random_small(m, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// `n` distinct values from `draw`, strictly descending. Gives up (returns
/// fewer) after a bounded number of repeats.
fn distinct_desc<R: Rng>(n: usize, rng: &mut R, mut draw: impl FnMut(&mut R) -> Ordinal) -> Vec<Ordinal> {
    let mut out: Vec<Ordinal> = Vec::with_capacity(n);
    let mut tries = 0;
    while out.len() < n && tries < 200 * (n + 1) {
        tries += 1;
        let x = draw(rng);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// An optional leading term `eps_m^e * c` with `e` above `floor`.
fn random_head<R: Rng>(m: i32, floor: &Ordinal, rng: &mut R) -> Vec<(i32, Ordinal, Ordinal)> {
    if rng.gen_bool(0.5) {
        return Vec::new();
    }
    let e = floor.add(&Ordinal::nat(rng.gen_range(1..=2)));
    vec![(m, e, nonzero_small(m, rng))]
}

fn build(parts: &[(i32, Ordinal, Ordinal)]) -> Ordinal {
    Ordinal::normalize(parts).expect("levels are valid")
}

/// A descending set of `r` ordinals below `tow_2(eps_m)`, built to be
/// homogeneous in `color` for triples. Returns `None` if the random pools
/// were too small for `r`.
pub fn random_l3<R: Rng>(m: i32, color: u64, r: usize, rng: &mut R) -> Option<Vec<Ordinal>> {
    match color {
        1 => {
            // rho + eps^delta * xi_i + tau_i with distinct xi_i.
            let delta = random_small(m, rng);
            let xis = distinct_desc(r, rng, |g| nonzero_small(m, g));
            if xis.len() < r {
                return None;
            }
            let head = random_head(m, &delta, rng);
            let out = xis
                .into_iter()
                .map(|xi| {
                    let mut parts = head.clone();
                    parts.push((m, delta.clone(), xi));
                    if !delta.is_zero() && rng.gen_bool(0.5) {
                        let t = random_small(m, rng);
                        if t < delta {
                            parts.push((m, t, nonzero_small(m, rng)));
                        }
                    }
                    build(&parts)
                })
                .collect();
            Some(out)
        }
        _ => {
            let exps = distinct_desc(r - 1, rng, |g| random_small(m, g));
            if exps.len() < r - 1 {
                return None;
            }
            Some(from_exponents(m, color, &exps, rng))
        }
    }
}

/// Sets whose consecutive last differences are exactly `exps` (color 2,
/// descending differences) or `exps` reversed (color 0, ascending).
fn from_exponents<R: Rng>(m: i32, color: u64, exps: &[Ordinal], rng: &mut R) -> Vec<Ordinal> {
    let head = random_head(m, &exps[0], rng);
    let terms: Vec<(i32, Ordinal, Ordinal)> =
        exps.iter().map(|e| (m, e.clone(), nonzero_small(m, rng))).collect();
    let n = terms.len();
    (0..=n)
        .map(|i| {
            let mut parts = head.clone();
            match color {
                // gamma_i keeps the terms from index i on.
                2 => parts.extend_from_slice(&terms[i..]),
                // gamma_i drops the lowest i terms.
                _ => parts.extend_from_slice(&terms[..n - i]),
            }
            build(&parts)
        })
        .collect()
}

/// A descending set of `r >= k` ordinals homogeneous for `k`-tuples,
/// built recursively: the triple part is chosen at random, and for the
/// monotone cases the last-difference sequence is itself a random
/// homogeneous set for `(k-1)`-tuples.
pub fn random_homogeneous<R: Rng>(m: i32, k: usize, r: usize, rng: &mut R) -> Option<Vec<Ordinal>> {
    let head = rng.gen_range(0..3u64);
    if k <= 3 || head == 1 {
        return random_l3(m, head, r, rng);
    }
    let deltas = random_homogeneous(m, k - 1, r - 1, rng)?;
    Some(from_exponents(m, head, &deltas, rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ramsey::{check_homogeneity, split_color, Homogeneity, TupleColoring};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_ordinals_stay_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in -1..=1 {
            for _ in 0..200 {
                let x = random_small(m, &mut rng);
                assert!(x.psn() <= 2 && x < Ordinal::eps(m), "{x}");
            }
        }
    }

    #[test]
    fn generated_sets_are_homogeneous() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for color in 0..3 {
            for r in 3..7 {
                let g = random_l3(0, color, r, &mut rng).unwrap();
                assert_eq!(g.len(), r);
                let h = check_homogeneity(&TupleColoring { m: 0, k: 3 }, &g).unwrap();
                assert_eq!(h, Homogeneity::Homogeneous(color), "{g:?}");
            }
        }
        for k in 4..=5 {
            for _ in 0..20 {
                let g = random_homogeneous(0, k, k + 2, &mut rng).unwrap();
                let h = check_homogeneity(&TupleColoring { m: 0, k }, &g).unwrap();
                let Homogeneity::Homogeneous(c) = h else { panic!("{g:?}") };
                assert!(split_color(k, c).0 < 3);
            }
        }
    }
}
