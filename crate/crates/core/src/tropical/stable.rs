use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convention::Convention;
use crate::cycles::{TropicalCycle, WeightedFan};
use crate::error::{Error, Result};
use crate::fans::Cone;
use crate::linalg::dot;
use crate::linalg::lattice::{lattice_index, rank_of, IntVec};

const ATTEMPTS: usize = 32;
const BOX: i64 = 1_000_000;

enum Pair {
    /// Spans are transverse and the cones meet in the expected dimension.
    Candidate { cell: Cone, difference: Cone, weight: u64 },
    /// Spans do not fill the space; `v` must avoid their sum.
    Degenerate { span: Vec<IntVec>, rank: usize },
}

/// Stable intersection by the fan displacement rule, with the displacement
/// vector drawn from a generator seeded by `seed`.
pub fn stable_intersection(a: &TropicalCycle, b: &TropicalCycle, seed: u64) -> Result<TropicalCycle> {
    let n = a.ambient_dim();
    if b.ambient_dim() != n {
        return Err(Error::DimMismatch { expected: n, found: b.ambient_dim() });
    }
    if a.convention() != b.convention() {
        return Err(Error::ConventionMismatch {
            left: a.convention().to_string(),
            right: b.convention().to_string(),
        });
    }
    let convention = a.convention();
    if convention == Convention::Max {
        let min = stable_intersection(&a.swap_convention(), &b.swap_convention(), seed)?;
        return Ok(min.swap_convention());
    }
    if a.fan().is_empty() || b.fan().is_empty() || a.dim() + b.dim() < n as i64 {
        return Ok(TropicalCycle::empty(n, convention));
    }
    let d = (a.dim() + b.dim()) as usize - n;

    let mut pairs = Vec::new();
    for (sa, ma) in a.weighted_cones() {
        for (sb, mb) in b.weighted_cones() {
            let span: Vec<IntVec> = sa.span_generators().into_iter().chain(sb.span_generators()).collect();
            let rank = rank_of(&span, n);
            if rank < n {
                pairs.push(Pair::Degenerate { span, rank });
                continue;
            }
            let cell = sa.intersection(sb)?;
            if cell.dim() != d {
                continue;
            }
            let index = lattice_index(&sa.span_lattice(), &sb.span_lattice())?;
            let weight = index
                .to_u64()
                .and_then(|i| i.checked_mul(ma)?.checked_mul(mb))
                .ok_or_else(|| Error::Overflow("stable intersection multiplicity".into()))?;
            pairs.push(Pair::Candidate { cell, difference: sa.sum(&sb.negated())?, weight });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let v: IntVec = (0..n).map(|_| BigInt::from(rng.gen_range(-BOX..=BOX))).collect();
        if !pairs.iter().all(|p| is_generic(p, &v, n)) {
            continue;
        }
        let cells = pairs.iter().filter_map(|p| match p {
            Pair::Candidate { cell, difference, weight } if difference.contains_int(&v) => {
                Some((cell.clone(), *weight))
            }
            _ => None,
        });
        return TropicalCycle::new(WeightedFan::from_weighted_cones(n, cells, convention)?);
    }
    Err(Error::GenericityExhausted { attempts: ATTEMPTS })
}

fn is_generic(pair: &Pair, v: &IntVec, n: usize) -> bool {
    match pair {
        Pair::Candidate { difference, .. } => difference.inequalities().iter().all(|h| !dot(h, v).is_zero()),
        Pair::Degenerate { span, rank } => {
            let mut with_v = span.clone();
            with_v.push(v.clone());
            rank_of(&with_v, n) > *rank
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::tropical::tropical_hypersurface;

    fn hyp(f: &str, vars: &[&str]) -> TropicalCycle {
        tropical_hypersurface(&parse_polynomial(f, vars).unwrap(), Convention::Min).unwrap()
    }

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn line_meets_conic_twice() {
        let xyz = ["x", "y", "z"];
        let line = hyp("x+2*y-3*z", &xyz);
        let conic = hyp("5*x^2-7*y^2+11*z^2", &xyz);
        for seed in 0..3 {
            let s = stable_intersection(&line, &conic, seed).unwrap();
            assert!(s.fan().rays().is_empty());
            assert_eq!(s.fan().lineality(), &[iv(&[1, 1, 1])]);
            assert_eq!(s.max_cones(), &[Vec::<usize>::new()]);
            assert_eq!(s.multiplicities(), &[2]);
        }
    }

    #[test]
    fn line_meets_itself_once() {
        let line = hyp("x+y+1", &["x", "y"]);
        let s = stable_intersection(&line, &line, 7).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s.fan().cones(), &[Cone::origin(2)]);
        assert_eq!(s.multiplicities(), &[1]);
    }

    #[test]
    fn full_space_is_the_identity() {
        let line = hyp("x+y+1", &["x", "y"]);
        let whole = TropicalCycle::new(
            WeightedFan::from_weighted_cones(2, [(Cone::full_space(2), 1)], Convention::Min).unwrap(),
        )
        .unwrap();
        assert_eq!(stable_intersection(&whole, &line, 0).unwrap(), line);
        assert_eq!(stable_intersection(&line, &whole, 0).unwrap(), line);
    }

    #[test]
    fn mismatches() {
        let line = hyp("x+y+1", &["x", "y"]);
        let plane = hyp("x+y+z", &["x", "y", "z"]);
        assert!(matches!(stable_intersection(&line, &plane, 0), Err(Error::DimMismatch { .. })));
        let max = line.swap_convention();
        assert!(matches!(stable_intersection(&line, &max, 0), Err(Error::ConventionMismatch { .. })));
        let s = stable_intersection(&max, &max, 0).unwrap();
        assert_eq!(s.convention(), Convention::Max);
        assert_eq!(s.multiplicities(), &[1]);
    }

    #[test]
    fn too_small_gives_empty() {
        let origin = TropicalCycle::new(
            WeightedFan::from_weighted_cones(2, [(Cone::origin(2), 1)], Convention::Min).unwrap(),
        )
        .unwrap();
        let line = hyp("x+y+1", &["x", "y"]);
        assert!(stable_intersection(&origin, &line, 0).unwrap().fan().is_empty());
    }
}
