//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use dias::bounds::{all_bounds, check_bound, five_term_report, thm43_report, BoundKind};
use dias::cli::format::{load, load_defining_pair};
use dias::cohomology::{
    coboundary_space, cocycle_space, multiplier_dim, vanishing_check, verify_defining_pair,
    Category,
};
use dias::{QDiAlgebra, QSubspace, Rat, Subspace, Variant};
use num_traits::One;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e1() -> QSubspace {
    Subspace::from_vectors(2, vec![vec![Rat::from_integer(0.into()), Rat::one()]])
}

fn criterion1() -> Check {
    let a = fixture("ex6.json");
    let assoc = multiplier_dim(&a, Category::Assoc).map_err(|e| e.to_string())?;
    let dias = multiplier_dim(&a, Category::Dias).map_err(|e| e.to_string())?;
    ensure((assoc, dias) == (1, 2), || format!("got assoc {assoc}, dias {dias}"))?;
    Ok(format!("assoc {assoc}, dias {dias}"))
}

fn criterion2() -> Check {
    for n in 1..=4usize {
        let a = fixture(&format!("abelian{n}.json"));
        ensure(a == QDiAlgebra::abelian(n).with_names(a.names().to_vec()).unwrap(), || {
            format!("abelian{n}.json is not abelian")
        })?;
        let d = multiplier_dim(&a, Category::Dias).unwrap();
        let s = multiplier_dim(&a, Category::Assoc).unwrap();
        ensure(d == 2 * n * n && s == n * n, || format!("n = {n}: dias {d}, assoc {s}"))?;
    }
    Ok("n = 1..4: 2n² and n²".into())
}

fn criterion3() -> Check {
    let a = fixture("ex6.json");
    let z = e1();
    let want = [
        (BoundKind::Cor42, Category::Assoc, (2, 3)),
        (BoundKind::Cor42, Category::Dias, (3, 6)),
        (BoundKind::Cor44, Category::Assoc, (1, 2)),
        (BoundKind::Cor44, Category::Dias, (2, 5)),
    ];
    let mut got = Vec::new();
    for (kind, cat, pair) in want {
        let r = check_bound(&a, kind, cat, Some(&z)).map_err(|e| e.to_string())?;
        ensure(r.pair() == Some(pair) && r.holds == Some(true), || {
            format!("{cat} {kind}: {:?}", r.pair())
        })?;
        got.push(format!("{cat} {kind} {pair:?}"));
    }
    Ok(got.join(", "))
}

fn criterion4() -> Check {
    let mut dims = Vec::new();
    for (name, dim, cat) in [
        ("cover_assoc.json", 3, Category::Assoc),
        ("cover_dias.json", 4, Category::Dias),
    ] {
        let loaded = load(&fixtures_dir().join(name)).map_err(|e| e.to_string())?;
        let p = load_defining_pair(&loaded).map_err(|e| e.to_string())?;
        let ok = verify_defining_pair(&p.cover, &p.kernel, &p.base, &p.basis_map)
            .map_err(|e| e.to_string())?;
        ensure(ok, || format!("{name} is not a defining pair"))?;
        ensure(p.cover.dim() == dim, || format!("{name} has dim {}", p.cover.dim()))?;
        // maximal: the kernel has the dimension of the multiplier
        let m = multiplier_dim(&p.base, cat).unwrap();
        ensure(p.kernel.dim() == m, || format!("{name}: kernel {} vs multiplier {m}", p.kernel.dim()))?;
        dims.push(p.cover.dim().to_string());
    }
    Ok(format!("cover dims {}", dims.join(", ")))
}

/// Central ideals to feed the five-term sequence.
fn central_ideals(a: &QDiAlgebra) -> Vec<QSubspace> {
    let n = a.dim();
    let center = a.center();
    let mut out = vec![Subspace::zero(n), center.clone()];
    for b in center.basis() {
        out.push(Subspace::from_vectors(n, vec![b.clone()]));
    }
    out.push(center.intersect(&a.derived()).unwrap());
    if let Some(c) = a.nilpotency_class().filter(|&c| c > 0) {
        out.push(a.series_report().lower_term(c).clone());
    }
    out.dedup();
    out
}

fn criterion5(corpus: &[(String, QDiAlgebra)]) -> Check {
    let mut sequences = 0;
    for (name, a) in corpus {
        for cat in categories(a) {
            for z in central_ideals(a) {
                let rep = five_term_report(a, cat, &z).map_err(|e| format!("{name}: {e}"))?;
                ensure(rep.is_exact(), || format!("{name} {cat} z = {z}: {:?}", rep.exact_at()))?;
                sequences += 1;
            }
            if a.dim() > 0 {
                let rep = thm43_report(a, cat).map_err(|e| format!("{name}: {e}"))?;
                ensure(rep.is_exact(), || format!("{name} {cat}: tail not exact"))?;
                sequences += 1;
            }
        }
    }
    Ok(format!("{sequences} sequences exact on {} algebras", corpus.len()))
}

fn criterion6(corpus: &[(String, QDiAlgebra)]) -> Check {
    let mut checks = 0;
    for (name, a) in corpus {
        let s = a.series_report();
        let class = s.nilpotency_class.unwrap();
        for cat in categories(a) {
            ensure(vanishing_check(a, cat, &s.derived, &s.center).unwrap(), || {
                format!("{name} {cat}: cocycle nonzero on L' x Z")
            })?;
            checks += 1;
            if class > 0 {
                let ok = vanishing_check(a, cat, &s.upper_term(class - 1), s.lower_term(class)).unwrap();
                ensure(ok, || format!("{name} {cat}: cocycle nonzero on Z_(n-1) x L^n"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} vanishing checks"))
}

fn criterion7(corpus: &[(String, QDiAlgebra)]) -> Check {
    for (name, a) in corpus {
        let right = a.lower_central(Variant::RightIterated);
        ensure(right == a.lower_central(Variant::LeftIterated), || format!("{name}: left variant differs"))?;
        ensure(right == a.lower_central(Variant::Full), || format!("{name}: full variant differs"))?;
        ensure(a.lemma22_check().unwrap(), || format!("{name}: upper central containment fails"))?;
        for cat in categories(a) {
            let b = coboundary_space(a, cat).unwrap().dim();
            ensure(b == a.derived().dim(), || format!("{name} {cat}: dim B² = {b}"))?;
        }
        let s = a.series_report();
        let class = s.nilpotency_class.unwrap();
        if class > 0 {
            ensure(s.lower_term(class).is_subspace_of(&s.center), || format!("{name}: L^n not central"))?;
            ensure(s.derived.is_subspace_of(&s.upper_term(class - 1)), || {
                format!("{name}: L' not in Z_(n-1)")
            })?;
        }
    }
    Ok(format!("{} algebras", corpus.len()))
}

fn criterion8(corpus: &[(String, QDiAlgebra)]) -> Check {
    let mut evaluated = std::collections::BTreeMap::<String, usize>::new();
    for (name, a) in corpus {
        let mut reports = all_bounds(a).unwrap();
        // every one-dimensional ideal spanned by a basis vector of Z(L) ∩ L'
        let meet = a.center().intersect(&a.derived()).unwrap();
        for b in meet.basis() {
            let z = Subspace::from_vectors(a.dim(), vec![b.clone()]);
            for cat in categories(a) {
                reports.push(check_bound(a, BoundKind::Cor42, cat, Some(&z)).unwrap());
            }
        }
        for r in &reports {
            if r.hypotheses_ok {
                ensure(r.holds == Some(true), || format!("{name} {} {}: {:?}", r.category, r.name, r.pair()))?;
                *evaluated.entry(format!("{}/{}", r.category, r.name)).or_default() += 1;
            }
        }
        let c45 = check_bound(a, BoundKind::Cor45, Category::Dias, None).unwrap().rhs;
        let c46 = check_bound(a, BoundKind::Cor46, Category::Dias, None).unwrap().rhs;
        ensure(c46 >= c45, || format!("{name}: cor46 rhs below cor45 rhs"))?;
        if a.is_abelian() {
            let r = check_bound(a, BoundKind::Cor47, Category::Dias, None).unwrap();
            let d = a.dim() as i64;
            ensure(r.pair() == Some((2 * d * d, 2 * d * d)), || format!("{name}: cor47 {:?}", r.pair()))?;
        }
    }
    ensure(evaluated.len() == 10, || format!("only evaluated {:?}", evaluated.keys()))?;
    let total: usize = evaluated.values().sum();
    Ok(format!("{total} reports hold across 10 bound/category pairs"))
}

fn criterion9(corpus: &[(String, QDiAlgebra)]) -> Check {
    let mut compared = 0;
    for (name, a) in corpus {
        for cat in categories(a) {
            let fast = cocycle_space(a, cat).unwrap().dim();
            let naive = naive_cocycle_dim(a, cat);
            ensure(fast == naive, || format!("{name} {cat}: {fast} vs {naive}"))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} cocycle dimensions agree"))
}

fn main() {
    let start = Instant::now();
    let fixtures = fixture_corpus();
    let corpus = full_corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("1 ground-truth multipliers", Box::new(criterion1)),
        ("2 abelian extremes", Box::new(criterion2)),
        ("3 worked bound instances", Box::new(criterion3)),
        ("4 cover verification", Box::new(criterion4)),
        ("5 exactness suite", Box::new(|| criterion5(&corpus))),
        ("6 hypothesis discharge", Box::new(|| criterion6(&corpus))),
        ("7 structural identities", Box::new(|| criterion7(&corpus))),
        ("8 bound suite", Box::new(|| criterion8(&corpus))),
        ("9 oracle cross-check", Box::new(|| criterion9(&fixtures))),
    ];
    let results: Vec<(&str, Check, Duration)> = criteria
        .into_iter()
        .map(|(name, f)| {
            let t = Instant::now();
            let r = f();
            (name, r, t.elapsed())
        })
        .collect();
    let mut failed = 0;
    for (name, r, took) in &results {
        match r {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{took:.1?}]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{took:.1?}]");
            }
        }
    }
    println!(
        "{} of {} criteria passed ({} corpus algebras, {:.1?})",
        results.len() - failed,
        results.len(),
        corpus.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
