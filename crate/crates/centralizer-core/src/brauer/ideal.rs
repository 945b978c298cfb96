//! Two-sided ideals of the Brauer algebra generated by e_1 e_3 ... e_{2f-1},
//! computed by saturating the generator under multiplication by the
//! presentation generators. Since the generator is a single diagram and
//! diagram products are scalar multiples of diagrams, the span is tracked
//! as a set of diagrams; a product acquiring an interior loop is dropped
//! only when the specialized parameter -2m vanishes in the field.

use std::collections::BTreeSet;

use crate::brauer::{
    diagram_basis_index, enumerate_diagrams, generator, BrauerError, Diagram, Gen,
};
use crate::linalg::{Mat, Subspace};
use crate::scalar::FieldSpec;

#[derive(Clone, Debug)]
pub struct BrauerIdeal {
    pub n: usize,
    pub f: usize,
    /// Diagrams spanning the ideal, in canonical order.
    pub diagrams: Vec<Diagram>,
    /// The span as a subspace of the (2n-1)!!-dimensional algebra.
    pub span: Subspace,
}

/// The product diagram e_1 e_3 ... e_{2f-1}; the identity when f = 0.
pub fn ideal_generator_diagram(n: usize, f: usize) -> Diagram {
    assert!(2 * f <= n);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..f {
        pairs.push((2 * j, 2 * j + 1));
        pairs.push((n + 2 * j, n + 2 * j + 1));
    }
    for v in 2 * f..n {
        pairs.push((v, n + v));
    }
    Diagram::from_pairs(n, &pairs)
}

fn span_of_diagrams(n: usize, diagrams: &BTreeSet<Diagram>, field: FieldSpec) -> Subspace {
    let index = diagram_basis_index(n);
    let dim = index.len();
    let mut rows = Vec::with_capacity(diagrams.len());
    for d in diagrams {
        let mut row = vec![field.zero(); dim];
        row[index[d]] = field.one();
        rows.push(row);
    }
    Subspace::from_rows(&Mat::from_rows(rows, dim, field))
}

/// The two-sided ideal generated by e_1 e_3 ... e_{2f-1} in the Brauer
/// algebra with parameter -2m over `field`. f = floor(n/2) + 1 gives the
/// zero ideal by convention.
pub fn ideal_bf(n: usize, f: usize, m: u32, field: FieldSpec) -> Result<BrauerIdeal, BrauerError> {
    if f > n / 2 + 1 {
        return Err(BrauerError::IndexOutOfRange { i: f, n });
    }
    let index = diagram_basis_index(n);
    if f > n / 2 {
        return Ok(BrauerIdeal {
            n,
            f,
            diagrams: vec![],
            span: Subspace::zero(index.len(), field),
        });
    }
    let delta_vanishes = field.from_i64(-2 * m as i64).is_zero();
    let gens: Vec<Diagram> = (1..n)
        .flat_map(|i| [Gen::S(i), Gen::E(i)])
        .map(|g| generator(g, n).unwrap())
        .collect();
    let mut reached: BTreeSet<Diagram> = BTreeSet::new();
    let mut work = vec![ideal_generator_diagram(n, f)];
    reached.insert(work[0].clone());
    while let Some(d) = work.pop() {
        for g in &gens {
            for prod in [d.multiply(g)?, g.multiply(&d)?] {
                let (p, loops) = prod;
                if loops > 0 && delta_vanishes {
                    continue;
                }
                if reached.insert(p.clone()) {
                    work.push(p);
                }
            }
        }
    }
    let span = span_of_diagrams(n, &reached, field);
    Ok(BrauerIdeal {
        n,
        f,
        diagrams: reached.into_iter().collect(),
        span,
    })
}

/// The independent combinatorial description: all diagrams with at least
/// f horizontal arcs per row.
pub fn arc_span_diagrams(n: usize, f: usize) -> Vec<Diagram> {
    enumerate_diagrams(n)
        .into_iter()
        .filter(|d| d.top_arcs() >= f)
        .collect()
}

pub fn arc_span(n: usize, f: usize, field: FieldSpec) -> Subspace {
    let set: BTreeSet<Diagram> = arc_span_diagrams(n, f).into_iter().collect();
    span_of_diagrams(n, &set, field)
}
