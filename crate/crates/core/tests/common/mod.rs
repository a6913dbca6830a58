#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use sepset_core::{FiniteAlgebra, Term};

pub fn fixture(name: &str) -> FiniteAlgebra {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"));
    FiniteAlgebra::load(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub const T1: &str = "+(*(x1,x2),x3)";
pub const T2: &str = "+(*(x1,x3),*(x2,neg(x3)))";

pub fn term(alg: &FiniteAlgebra, text: &str) -> Term {
    sepset_core::parse(text, &alg.signature()).unwrap()
}

/// Random term over the algebra's signature using variables `x1..x_max_var`.
/// Leaves are constants with probability `const_weight`.
pub fn random_term(
    rng: &mut impl Rng,
    alg: &FiniteAlgebra,
    max_var: usize,
    depth: usize,
    const_weight: f64,
) -> Term {
    if depth == 0 || rng.gen_bool(0.3) {
        if rng.gen_bool(const_weight) {
            return Term::Const(rng.gen_range(0..alg.carrier() as u32));
        }
        return Term::Var(rng.gen_range(1..=max_var));
    }
    let op = alg.operations().choose(rng).unwrap();
    let args = (0..op.arity())
        .map(|_| random_term(rng, alg, max_var, depth - 1, const_weight))
        .collect();
    Term::Apply(op.symbol().to_string(), args)
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut sigma: Vec<usize> = (1..=n).collect();
    sigma.shuffle(rng);
    sigma
}

/// Every term over `alg` in variables `x1..xn` with at most `max_ops` operation symbols.
pub fn all_terms(alg: &FiniteAlgebra, n: usize, max_ops: usize) -> Vec<Term> {
    // by_ops[c] = terms with exactly c operation symbols
    let mut by_ops: Vec<Vec<Term>> = vec![(1..=n).map(Term::Var).collect()];
    for c in 1..=max_ops {
        let mut level = Vec::new();
        for op in alg.operations() {
            let r = op.arity();
            for split in compositions(c - 1, r) {
                let mut partial: Vec<Vec<Term>> = vec![Vec::new()];
                for &part in &split {
                    partial = partial
                        .into_iter()
                        .flat_map(|prefix| {
                            by_ops[part].iter().map(move |t| {
                                let mut next = prefix.clone();
                                next.push(t.clone());
                                next
                            })
                        })
                        .collect();
                }
                level.extend(
                    partial
                        .into_iter()
                        .map(|args| Term::Apply(op.symbol().to_string(), args)),
                );
            }
        }
        by_ops.push(level);
    }
    by_ops.into_iter().flatten().collect()
}

/// Ordered ways of writing `total` as `parts` nonnegative summands.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Evaluation-counting complexity by plain nested loops over raw tuples.
///
/// Returns `(M as sorted indices, count)` for every nonempty `M`, with sets
/// enumerated by bitmask. Shares no code with the library.
pub fn brute_force_cp3(values: &[u32], k: usize, n: usize) -> Vec<(Vec<usize>, u64)> {
    let size = k.pow(n as u32);
    assert_eq!(values.len(), size);
    let decode = |mut code: usize, len: usize| -> Vec<usize> {
        let mut digits = vec![0; len];
        for d in digits.iter_mut().rev() {
            *d = code % k;
            code /= k;
        }
        digits
    };
    let encode = |tuple: &[usize]| tuple.iter().fold(0, |acc, &a| acc * k + a);
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let in_m: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
        let outside: Vec<usize> = (0..n).filter(|&i| !in_m[i]).collect();
        let mut count = 0;
        for code in 0..k.pow(outside.len() as u32) {
            let consts = decode(code, outside.len());
            let restricted = |tuple: &[usize]| {
                let mut t = tuple.to_vec();
                for (&pos, &c) in outside.iter().zip(&consts) {
                    t[pos] = c;
                }
                values[encode(&t)]
            };
            let mut essential = vec![false; n];
            for idx in 0..size {
                let tuple = decode(idx, n);
                for i in 0..n {
                    for b in 0..k {
                        let mut other = tuple.clone();
                        other[i] = b;
                        if restricted(&tuple) != restricted(&other) {
                            essential[i] = true;
                        }
                    }
                }
            }
            if essential == in_m {
                count += 1;
            }
        }
        let set: Vec<usize> = (0..n).filter(|&i| in_m[i]).map(|i| i + 1).collect();
        out.push((set, count));
    }
    out
}
