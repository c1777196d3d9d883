use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{coboundary_space, cocycle_space, extend_by_cocycles, Category, CocyclePair};
use crate::dialg::{default_names, DiAlgebra};
use crate::exactlin::{Scalar, Subspace};

const ATTEMPTS_PER_COCYCLE: usize = 8;

/// Deterministic pseudo-random nilpotent diassociative algebra.
///
/// Starts from the abelian algebra of `base_dim` and applies `steps` central extensions,
/// each by up to `max_new_per_step` cocycles that are independent modulo coboundaries.
pub fn random_nilpotent<S: Scalar>(
    seed: u64,
    base_dim: usize,
    steps: usize,
    max_new_per_step: usize,
) -> DiAlgebra<S> {
    random_nilpotent_in(Category::Dias, seed, base_dim, steps, max_new_per_step)
}

/// Same as [`random_nilpotent`]; in [`Category::Assoc`] the result has `⊣ = ⊢` and is
/// an associative algebra.
pub fn random_nilpotent_in<S: Scalar>(
    category: Category,
    seed: u64,
    base_dim: usize,
    steps: usize,
    max_new_per_step: usize,
) -> DiAlgebra<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = DiAlgebra::<S>::abelian(base_dim);
    for _ in 0..steps {
        if max_new_per_step == 0 {
            break;
        }
        let z = cocycle_space(&a, category).expect("generated algebras stay in category");
        let mut acc = coboundary_space(&a, category).expect("same category").basis;
        let wanted = rng.gen_range(1..=max_new_per_step);
        let mut chosen: Vec<CocyclePair<S>> = Vec::new();
        for _ in 0..wanted {
            for _ in 0..ATTEMPTS_PER_COCYCLE {
                let v = random_combination(&mut rng, &z.basis);
                if acc.contains(&v) {
                    continue;
                }
                acc = acc
                    .sum(&Subspace::from_vectors(v.len(), vec![v.clone()]))
                    .expect("same ambient");
                chosen.push(CocyclePair::from_category_flat(category, a.dim(), &v));
                break;
            }
        }
        if chosen.is_empty() {
            continue;
        }
        a = extend_by_cocycles(&a, &chosen)
            .expect("chosen pairs are cocycles")
            .total;
    }
    let n = a.dim();
    a.with_names(default_names(n)).expect("name count matches")
}

fn random_combination<S: Scalar>(rng: &mut ChaCha8Rng, space: &Subspace<S>) -> Vec<S> {
    let mut v = vec![S::zero(); space.ambient_dim()];
    for b in space.basis() {
        let c = S::from_i64(rng.gen_range(-2..=2));
        if c.is_zero() {
            continue;
        }
        for (x, y) in v.iter_mut().zip(b) {
            if !y.is_zero() {
                *x = x.clone() + c.clone() * y.clone();
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn no_steps_is_abelian() {
        let a: DiAlgebra<Rat> = random_nilpotent(3, 3, 0, 2);
        assert_eq!(a, DiAlgebra::abelian(3));
    }

    #[test]
    fn deterministic_per_seed() {
        let a: DiAlgebra<Rat> = random_nilpotent(11, 2, 2, 2);
        let b: DiAlgebra<Rat> = random_nilpotent(11, 2, 2, 2);
        assert_eq!(a, b);
    }

    #[test]
    fn outputs_are_valid_and_nilpotent() {
        for seed in 0..6 {
            let a: DiAlgebra<Rat> = random_nilpotent(seed, 2, 2, 2);
            assert!(a.is_valid(), "seed {seed}");
            assert!(a.nilpotency_class().is_some(), "seed {seed}");
            let b: DiAlgebra<Rat> = random_nilpotent_in(Category::Assoc, seed, 2, 2, 2);
            assert!(b.is_valid() && b.is_associative_type(), "seed {seed}");
            assert!(b.nilpotency_class().is_some(), "seed {seed}");
        }
    }
}
