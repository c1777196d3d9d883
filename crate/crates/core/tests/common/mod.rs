#![allow(dead_code)]

use std::path::PathBuf;

use dias::cli::format::load_algebra;
use dias::cohomology::{random_nilpotent_in, Category};
use dias::{Product, QDiAlgebra, Rat};
use num_traits::{One, Zero};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture(name: &str) -> QDiAlgebra {
    load_algebra(&fixtures_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Every fixture that is a valid nilpotent algebra.
pub fn fixture_corpus() -> Vec<(String, QDiAlgebra)> {
    let mut names: Vec<String> = std::fs::read_dir(fixtures_dir())
        .unwrap()
        .filter_map(|e| e.ok())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|n| {
            let a = fixture(&n);
            (n, a)
        })
        .filter(|(_, a)| a.is_valid() && a.nilpotency_class().is_some())
        .collect()
}

/// (base dim, steps, max new per step), each reaching at most dim 6.
const SHAPES: [(usize, usize, usize); 9] = [
    (1, 2, 2),
    (2, 2, 2),
    (1, 3, 1),
    (2, 2, 1),
    (3, 1, 2),
    (1, 4, 1),
    (2, 3, 1),
    (4, 1, 2),
    (3, 2, 1),
];

pub const SHAPE_COUNT: usize = SHAPES.len();

pub fn gen_algebra(category: Category, seed: u64, shape: usize) -> QDiAlgebra {
    let (base, steps, max_new) = SHAPES[shape % SHAPES.len()];
    random_nilpotent_in(category, seed, base, steps, max_new)
}

pub fn generated(category: Category, count: u64, seed0: u64) -> Vec<(String, QDiAlgebra)> {
    (0..count)
        .map(|s| {
            let seed = seed0 + s;
            let (base, steps, max_new) = SHAPES[(s as usize) % SHAPES.len()];
            let a = random_nilpotent_in(category, seed, base, steps, max_new);
            assert!(a.dim() <= 6);
            (format!("gen-{category}-{seed}-{base}-{steps}-{max_new}"), a)
        })
        .collect()
}

/// 50 generated diassociative algebras.
pub fn generated_corpus() -> Vec<(String, QDiAlgebra)> {
    generated(Category::Dias, 50, 1000)
}

/// 20 generated associative algebras (`⊣ = ⊢`).
pub fn assoc_corpus() -> Vec<(String, QDiAlgebra)> {
    generated(Category::Assoc, 20, 5000)
}

pub fn full_corpus() -> Vec<(String, QDiAlgebra)> {
    let mut all = fixture_corpus();
    all.extend(generated_corpus());
    all.extend(assoc_corpus());
    all
}

pub fn categories(a: &QDiAlgebra) -> Vec<Category> {
    if a.is_associative_type() {
        vec![Category::Dias, Category::Assoc]
    } else {
        vec![Category::Dias]
    }
}

// ---- naive oracle -------------------------------------------------------------------

/// Rank by plain Gaussian elimination on a dense copy.
pub fn naive_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone() / pivot.clone();
                for k in c..cols {
                    let t = rows[rank][k].clone() * f.clone();
                    rows[r][k] = rows[r][k].clone() - t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `e_i ∘ e_j` read straight off the tensor.
fn prod(a: &QDiAlgebra, p: Product, i: usize, j: usize) -> Vec<Rat> {
    (0..a.dim()).map(|k| a.sc(p, i, j, k).clone()).collect()
}

fn basis(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// `Σ x_a y_b F[a][b]` for a form stored row-major.
fn form(f: &[Rat], n: usize, x: &[Rat], y: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for a in 0..n {
        for b in 0..n {
            s += x[a].clone() * y[b].clone() * f[a * n + b].clone();
        }
    }
    s
}

/// `dim Z²` from every scalar cocycle equation, one basis triple at a time. Each equation's
/// row is found by probing it with every unit cochain.
pub fn naive_cocycle_dim(a: &QDiAlgebra, category: Category) -> usize {
    let n = a.dim();
    let forms = match category {
        Category::Dias => 2,
        Category::Assoc => 1,
    };
    let unknowns = forms * n * n;
    // residual of equation `eq` at (i, j, k) on the cochain `c`
    let residual = |c: &[Rat], eq: usize, i: usize, j: usize, k: usize| -> Rat {
        let fl = &c[..n * n];
        let fr = if forms == 2 { &c[n * n..] } else { fl };
        let (l, r) = (Product::Left, Product::Right);
        let ei = basis(n, i);
        let ek = basis(n, k);
        match (category, eq) {
            (Category::Assoc, _) => {
                form(fl, n, &ei, &prod(a, l, j, k)) - form(fl, n, &prod(a, l, i, j), &ek)
            }
            (_, 0) => form(fl, n, &ei, &prod(a, l, j, k)) - form(fl, n, &ei, &prod(a, r, j, k)),
            (_, 1) => form(fl, n, &prod(a, r, i, j), &ek) - form(fr, n, &ei, &prod(a, l, j, k)),
            (_, 2) => form(fr, n, &prod(a, l, i, j), &ek) - form(fr, n, &prod(a, r, i, j), &ek),
            (_, 3) => form(fl, n, &ei, &prod(a, l, j, k)) - form(fl, n, &prod(a, l, i, j), &ek),
            (_, _) => form(fr, n, &ei, &prod(a, r, j, k)) - form(fr, n, &prod(a, r, i, j), &ek),
        }
    };
    let equations = if forms == 2 { 5 } else { 1 };
    let mut rows = Vec::with_capacity(equations * n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for eq in 0..equations {
                    let row: Vec<Rat> = (0..unknowns)
                        .map(|u| residual(&basis(unknowns, u), eq, i, j, k))
                        .collect();
                    rows.push(row);
                }
            }
        }
    }
    assert_eq!(rows.len(), equations * n * n * n);
    unknowns - naive_rank(rows)
}
