use serde::Serialize;

use crate::cohomology::{
    coboundary_space, delta_map_in, inflation_in, transgression, Category, Spaces,
};
use crate::dialg::DiAlgebra;
use crate::exactlin::{Scalar, Subspace};
use crate::{Error, Result};

/// One object of an exact sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    pub name: String,
    pub dim: usize,
}

/// Rank and nullity of one arrow, measured on the cohomology level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub name: String,
    pub rank: usize,
    pub nullity: usize,
}

/// Image of the incoming arrow against kernel of the outgoing one at an interior node.
///
/// For `H²` nodes both subspaces live in the flat cochain space and contain `B²`; the
/// reported dims have `dim B²` subtracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Junction<S: Scalar> {
    pub node: String,
    pub image: Subspace<S>,
    pub kernel: Subspace<S>,
    pub image_dim: usize,
    pub kernel_dim: usize,
}

impl<S: Scalar> Junction<S> {
    fn new(node: &str, image: Subspace<S>, kernel: Subspace<S>, offset: usize) -> Self {
        Junction {
            node: node.to_string(),
            image_dim: image.dim() - offset,
            kernel_dim: kernel.dim() - offset,
            image,
            kernel,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.image == self.kernel
    }
}

#[derive(Clone, Debug)]
pub struct SequenceReport<S: Scalar> {
    pub category: Category,
    pub nodes: Vec<Node>,
    pub arrows: Vec<Arrow>,
    pub junctions: Vec<Junction<S>>,
}

impl<S: Scalar> SequenceReport<S> {
    pub fn exact_at(&self) -> Vec<bool> {
        self.junctions.iter().map(Junction::is_exact).collect()
    }

    pub fn is_exact(&self) -> bool {
        self.junctions.iter().all(Junction::is_exact)
    }

    pub fn node_dims(&self) -> Vec<usize> {
        self.nodes.iter().map(|n| n.dim).collect()
    }

    pub fn junction(&self, node: &str) -> Option<&Junction<S>> {
        self.junctions.iter().find(|j| j.node == node)
    }
}

fn node(name: &str, dim: usize) -> Node {
    Node {
        name: name.to_string(),
        dim,
    }
}

fn arrow(name: &str, rank: usize, nullity: usize) -> Arrow {
    Arrow {
        name: name.to_string(),
        rank,
        nullity,
    }
}

/// `0 → Hom(L/Z) → Hom(L) → Hom(Z) → H²(L/Z) → H²(L) → (L/L' ⊗ Z ⊕ Z ⊗ L/L')^forms`
/// for a central ideal `Z` of a nilpotent algebra.
pub fn five_term_report<S: Scalar>(
    a: &DiAlgebra<S>,
    category: Category,
    z: &Subspace<S>,
) -> Result<SequenceReport<S>> {
    category.check(a)?;
    if z.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: z.ambient_dim(),
        });
    }
    if a.nilpotency_class().is_none() {
        return Err(Error::NotNilpotent);
    }
    if !a.is_central(z)? {
        return Err(Error::NotCentral);
    }
    let derived = a.derived();
    let spaces = Spaces::of(a, category)?;
    let inf2 = inflation_in(a, category, z, &spaces)?;
    let quotient = &inf2.quotient;
    let tra = transgression(a, category, z)?;
    let delta = delta_map_in(a, category, &derived, z, &spaces)?;

    let hom_q = quotient.algebra.derived().annihilator();
    let hom_l = derived.annihilator();
    let inf1 = quotient.projection.transpose();
    let res = z.basis_matrix();

    let zq = &inf2.source.basis;
    let bq = coboundary_space(&quotient.algebra, category)?.basis;
    let (zl, bl) = (&spaces.cocycles, &spaces.coboundaries);

    let q = quotient.algebra.dim();
    let j0 = Junction::new(
        "Hom(L/Z)",
        Subspace::zero(q),
        hom_q.intersect(&inf1.nullspace())?,
        0,
    );
    let j1 = Junction::new(
        "Hom(L)",
        hom_q.image_under(&inf1),
        hom_l.intersect(&res.nullspace())?,
        0,
    );
    let j2 = Junction::new(
        "Hom(Z)",
        hom_l.image_under(&res),
        bq.preimage_under(&tra.matrix),
        0,
    );
    let j3 = Junction::new(
        "H2(L/Z)",
        tra.matrix.image().sum(&bq)?,
        zq.intersect(&bl.preimage_under(&inf2.matrix))?,
        bq.dim(),
    );
    let j4 = Junction::new(
        "H2(L)",
        inf2.image.sum(bl)?,
        delta.kernel.clone(),
        bl.dim(),
    );

    let nodes = vec![
        node("Hom(L/Z)", hom_q.dim()),
        node("Hom(L)", hom_l.dim()),
        node("Hom(Z)", z.dim()),
        node("H2(L/Z)", zq.dim() - bq.dim()),
        node("H2(L)", zl.dim() - bl.dim()),
        node("delta-codomain", delta.codomain_dim),
    ];
    let arrows = vec![
        arrow("Inf1", j1.image_dim, j0.kernel_dim),
        arrow("Res", j2.image_dim, j1.kernel_dim),
        arrow("Tra", j3.image_dim, j2.kernel_dim),
        arrow("Inf2", j4.image_dim, j3.kernel_dim),
        arrow("delta", delta.h2_image_dim, delta.h2_kernel_dim),
    ];
    Ok(SequenceReport {
        category,
        nodes,
        arrows,
        junctions: vec![j0, j1, j2, j3, j4],
    })
}

/// `H²(L/Lⁿ) → H²(L) → (L/Z_{n-1} ⊗ Lⁿ ⊕ Lⁿ ⊗ L/Z_{n-1})^forms` for class `n`.
pub fn thm43_report<S: Scalar>(a: &DiAlgebra<S>, category: Category) -> Result<SequenceReport<S>> {
    category.check(a)?;
    let series = a.series_report();
    let class = series.nilpotency_class.ok_or(Error::NotNilpotent)?;
    if class == 0 {
        return Err(Error::HypothesisFailed("zero algebra has no top central term".into()));
    }
    let top = series.lower_term(class).clone();
    let below = series.upper_term(class - 1);
    let spaces = Spaces::of(a, category)?;
    let inf = inflation_in(a, category, &top, &spaces)?;
    let delta = delta_map_in(a, category, &below, &top, &spaces)?;
    let bl = &spaces.coboundaries;
    let bq = coboundary_space(&inf.quotient.algebra, category)?.basis;

    let junction = Junction::new("H2(L)", inf.image.sum(bl)?, delta.kernel.clone(), bl.dim());
    let nodes = vec![
        node("H2(L/L^n)", inf.source.dim() - bq.dim()),
        node("H2(L)", spaces.h2_dim()),
        node("delta-codomain", delta.codomain_dim),
    ];
    let inf_null = (inf.source.dim() - bq.dim()) - inf.h2_image_dim;
    let arrows = vec![
        arrow("Inf", inf.h2_image_dim, inf_null),
        arrow("delta", delta.h2_image_dim, delta.h2_kernel_dim),
    ];
    Ok(SequenceReport {
        category,
        nodes,
        arrows,
        junctions: vec![junction],
    })
}
