//! The Brauer algebra on n strands with parameter -2m: diagram basis,
//! multiplication by concatenation with interior-loop counting, the
//! generator presentation, and the two-sided ideals spanned by diagrams
//! with at least f horizontal arcs per row.
//!
//! Vertices of a diagram are numbered 0..n across the top row and n..2n
//! across the bottom row; the printed form uses 1..n and 1'..n'.

pub mod ideal;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::linalg::Mat;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BrauerError {
    #[error("diagrams have different strand counts: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("generator index {i} out of range for n = {n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("cannot parse diagram from {0:?}")]
    Parse(String),
}

/// A perfect matching on the 2n vertices of a Brauer diagram, stored as the
/// partner table (canonical: equal matchings have equal tables).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Diagram {
    n: usize,
    partner: Vec<u16>,
}

/// Generator of the presentation: a transposition or a cup-cap.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    /// s_i, 1-based, 1 <= i <= n-1
    S(usize),
    /// e_i, 1-based, 1 <= i <= n-1
    E(usize),
}

impl Diagram {
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Diagram {
        assert_eq!(pairs.len(), n, "need n pairs for 2n vertices");
        let mut partner = vec![u16::MAX; 2 * n];
        for &(a, b) in pairs {
            assert!(a < 2 * n && b < 2 * n && a != b);
            assert!(partner[a] == u16::MAX && partner[b] == u16::MAX);
            partner[a] = b as u16;
            partner[b] = a as u16;
        }
        Diagram { n, partner }
    }

    pub fn identity(n: usize) -> Diagram {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
        Diagram::from_pairs(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v] as usize
    }

    /// Pairs in canonical form: each (min, max), sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n);
        for v in 0..2 * self.n {
            let w = self.partner(v);
            if v < w {
                out.push((v, w));
            }
        }
        out
    }

    /// Number of horizontal arcs in the top row (equals the bottom count).
    pub fn top_arcs(&self) -> usize {
        (0..self.n).filter(|&v| self.partner(v) < self.n).count() / 2
    }

    /// Concatenation product: self placed above other. Returns the composite
    /// diagram and the number of interior loops removed.
    pub fn multiply(&self, other: &Diagram) -> Result<(Diagram, usize), BrauerError> {
        if self.n != other.n {
            return Err(BrauerError::SizeMismatch(self.n, other.n));
        }
        let n = self.n;
        // layered vertices: 0..n top of self, n..2n shared middle, 2n..3n
        // bottom of other. Each middle vertex carries one edge from each
        // factor; exterior vertices carry one edge.
        let mut adj: Vec<[usize; 2]> = vec![[usize::MAX; 2]; 3 * n];
        let push = |adj: &mut Vec<[usize; 2]>, a: usize, b: usize| {
            for v in [a, b] {
                let slot = if adj[v][0] == usize::MAX { 0 } else { 1 };
                adj[v][slot] = a + b - v;
            }
        };
        for (a, b) in self.pairs() {
            push(&mut adj, a, b); // top indices stay, bottom n..2n = middle
        }
        for (a, b) in other.pairs() {
            push(&mut adj, a + n, b + n); // top -> middle, bottom -> 2n..3n
        }
        let mut seen = vec![false; 3 * n];
        let mut pairs = Vec::with_capacity(n);
        let exterior =
            |v: usize| -> bool { v < n || v >= 2 * n };
        for start in (0..n).chain(2 * n..3 * n) {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut prev = start;
            let mut cur = adj[start][0];
            while !exterior(cur) {
                seen[cur] = true;
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
            }
            seen[cur] = true;
            let a = start.min(cur);
            let b = start.max(cur);
            // map back to 2n vertices: exteriors 2n..3n are the new bottom row
            let fix = |v: usize| if v >= 2 * n { v - n } else { v };
            pairs.push((fix(a), fix(b)));
        }
        // remaining unseen middle vertices form the interior loops
        let mut loops = 0usize;
        for v in n..2 * n {
            if seen[v] {
                continue;
            }
            loops += 1;
            let mut prev = v;
            let mut cur = adj[v][0];
            seen[v] = true;
            while cur != v {
                seen[cur] = true;
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
            }
        }
        Ok((Diagram::from_pairs(n, &pairs), loops))
    }

    /// The mirror image across the horizontal axis (top and bottom rows
    /// swapped). An anti-involution of the diagram monoid.
    pub fn flip(&self) -> Diagram {
        let n = self.n;
        let sw = |v: usize| if v < n { v + n } else { v - n };
        let pairs: Vec<(usize, usize)> = self
            .pairs()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (sw(a), sw(b));
                (x.min(y), x.max(y))
            })
            .collect();
        Diagram::from_pairs(n, &pairs)
    }

    /// Writes the diagram as a generator word: a permutation word, then
    /// e_1 e_3 ... e_{2k-1}, then another permutation word. The product of
    /// the word evaluates to this diagram with no interior loops.
    pub fn factor_into_generators(&self) -> Vec<Gen> {
        let n = self.n;
        let mut top_arcs = Vec::new();
        let mut bottom_arcs = Vec::new();
        let mut through = Vec::new();
        for (a, b) in self.pairs() {
            if b < n {
                top_arcs.push((a, b));
            } else if a >= n {
                bottom_arcs.push((a - n, b - n));
            } else {
                through.push((a, b - n));
            }
        }
        let k = top_arcs.len();
        // sigma: top permutation sending arc j to positions (2j, 2j+1) and
        // the i-th through strand to 2k + i
        let mut sigma = vec![usize::MAX; n];
        for (j, &(a, b)) in top_arcs.iter().enumerate() {
            sigma[a] = 2 * j;
            sigma[b] = 2 * j + 1;
        }
        for (i, &(t, _)) in through.iter().enumerate() {
            sigma[t] = 2 * k + i;
        }
        // tau: bottom permutation from positions back to this diagram
        let mut tau = vec![usize::MAX; n];
        for (j, &(c, d)) in bottom_arcs.iter().enumerate() {
            tau[2 * j] = c;
            tau[2 * j + 1] = d;
        }
        for (i, &(_, u)) in through.iter().enumerate() {
            tau[2 * k + i] = u;
        }
        let mut word = permutation_word(&sigma);
        for j in 0..k {
            word.push(Gen::E(2 * j + 1));
        }
        word.extend(permutation_word(&tau));
        word
    }
}

/// Word of adjacent transpositions multiplying (left to right, as diagram
/// products) to the permutation diagram of `perm`, where `perm[i]` is the
/// bottom vertex wired to top vertex i.
fn permutation_word(perm: &[usize]) -> Vec<Gen> {
    // bubble sort: recording swaps of adjacent positions of the inverse
    let n = perm.len();
    let cur: Vec<usize> = (0..n).collect(); // cur[i] = image of i so far
    let mut word = Vec::new();
    // selection by adjacent swaps: build perm from identity
    // find, for each target position, the strand and bubble it into place
    let mut arr: Vec<usize> = (0..n).collect();
    for i in 0..n {
        let pos = arr.iter().position(|&x| x == perm[i]).unwrap();
        let mut p = pos;
        while p > i {
            arr.swap(p, p - 1);
            word.push(Gen::S(p)); // 1-based index p swaps positions p-1, p
            p -= 1;
        }
    }
    let _ = cur;
    // the word built this way maps i -> perm[i] reading top to bottom, but
    // each s recorded acts on the bottom of the partial product; reversing
    // gives the product in diagram order.
    word.reverse();
    word
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: usize| {
            if v < self.n {
                format!("{}", v + 1)
            } else {
                format!("{}'", v - self.n + 1)
            }
        };
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|&(a, b)| format!("({},{})", name(a), name(b)))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Parses the textual diagram form "[(1,2),(1',2')]".
pub fn parse_diagram(s: &str, n: usize) -> Result<Diagram, BrauerError> {
    let err = || BrauerError::Parse(s.to_string());
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(err)?;
    let mut pairs = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let start = rest.find('(').ok_or_else(err)?;
        let end = rest.find(')').ok_or_else(err)?;
        let body = &rest[start + 1..end];
        let (a, b) = body.split_once(',').ok_or_else(err)?;
        let parse_v = |t: &str| -> Result<usize, BrauerError> {
            let t = t.trim();
            if let Some(num) = t.strip_suffix('\'') {
                let v: usize = num.parse().map_err(|_| err())?;
                if v < 1 || v > n {
                    return Err(err());
                }
                Ok(n + v - 1)
            } else {
                let v: usize = t.parse().map_err(|_| err())?;
                if v < 1 || v > n {
                    return Err(err());
                }
                Ok(v - 1)
            }
        };
        pairs.push((parse_v(a)?, parse_v(b)?));
        rest = rest[end + 1..].trim_start_matches(',').trim();
    }
    if pairs.len() != n {
        return Err(err());
    }
    Ok(Diagram::from_pairs(n, &pairs))
}

/// Generator diagram s_i or e_i (1-based i, valid for 1 <= i <= n-1).
pub fn generator(g: Gen, n: usize) -> Result<Diagram, BrauerError> {
    let i = match g {
        Gen::S(i) | Gen::E(i) => i,
    };
    if i < 1 || i >= n {
        return Err(BrauerError::IndexOutOfRange { i, n });
    }
    let i0 = i - 1;
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter(|&j| j != i0 && j != i0 + 1)
        .map(|j| (j, n + j))
        .collect();
    match g {
        Gen::S(_) => {
            pairs.push((i0, n + i0 + 1));
            pairs.push((i0 + 1, n + i0));
        }
        Gen::E(_) => {
            pairs.push((i0, i0 + 1));
            pairs.push((n + i0, n + i0 + 1));
        }
    }
    Ok(Diagram::from_pairs(n, &pairs))
}

/// (2n-1)!! — the number of Brauer n-diagrams.
pub fn dimension(n: usize) -> u128 {
    let mut acc: u128 = 1;
    let mut k: u128 = 2 * n as u128 - 1;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// All Brauer n-diagrams, in a deterministic order.
pub fn enumerate_diagrams(n: usize) -> Vec<Diagram> {
    fn rec(free: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(pairs.clone());
            return;
        }
        let a = free[0];
        for idx in 1..free.len() {
            let b = free[idx];
            let mut rest: Vec<usize> = free.clone();
            rest.remove(idx);
            rest.remove(0);
            pairs.push((a, b));
            rec(&mut rest, pairs, out);
            pairs.pop();
        }
    }
    let mut free: Vec<usize> = (0..2 * n).collect();
    let mut out = Vec::new();
    rec(&mut free, &mut Vec::new(), &mut out);
    out.iter().map(|p| Diagram::from_pairs(n, p)).collect()
}

/// A formal linear combination of Brauer n-diagrams with parameter -2m,
/// coefficients in the session field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BrauerElt {
    pub n: usize,
    pub m: u32,
    pub field: FieldSpec,
    terms: BTreeMap<Diagram, Scalar>,
}

impl BrauerElt {
    pub fn zero(n: usize, m: u32, field: FieldSpec) -> BrauerElt {
        BrauerElt {
            n,
            m,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: Diagram, m: u32, field: FieldSpec) -> BrauerElt {
        let mut e = BrauerElt::zero(d.n(), m, field);
        e.add_term(d, field.one());
        e
    }

    pub fn one(n: usize, m: u32, field: FieldSpec) -> BrauerElt {
        BrauerElt::from_diagram(Diagram::identity(n), m, field)
    }

    /// The specialized parameter -2m as a field element.
    pub fn delta(&self) -> Scalar {
        self.field.from_i64(-2 * self.m as i64)
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, Scalar> {
        &self.terms
    }

    pub fn add_term(&mut self, d: Diagram, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&d) {
            None => {
                self.terms.insert(d, c);
            }
            Some(old) => {
                let s = old.add_unchecked(&c);
                if !s.is_zero() {
                    self.terms.insert(d, s);
                }
            }
        }
    }

    pub fn add(&self, other: &BrauerElt) -> BrauerElt {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> BrauerElt {
        let mut out = BrauerElt::zero(self.n, self.m, self.field);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v.mul_unchecked(c));
        }
        out
    }

    pub fn mul(&self, other: &BrauerElt) -> Result<BrauerElt, BrauerError> {
        if self.n != other.n {
            return Err(BrauerError::SizeMismatch(self.n, other.n));
        }
        let delta = self.delta();
        let mut out = BrauerElt::zero(self.n, self.m, self.field);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, loops) = d1.multiply(d2)?;
                let mut c = c1.mul_unchecked(c2);
                for _ in 0..loops {
                    c = c.mul_unchecked(&delta);
                }
                out.add_term(d, c);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient vector over the given diagram basis ordering.
    pub fn to_vec(&self, basis_index: &BTreeMap<Diagram, usize>) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); basis_index.len()];
        for (d, c) in &self.terms {
            v[basis_index[d]] = c.clone();
        }
        v
    }
}

/// Product of a generator word, specialized at parameter -2m over `field`.
pub fn evaluate_word(
    word: &[Gen],
    n: usize,
    m: u32,
    field: FieldSpec,
) -> Result<BrauerElt, BrauerError> {
    let mut acc = BrauerElt::one(n, m, field);
    for &g in word {
        let d = generator(g, n)?;
        acc = acc.mul(&BrauerElt::from_diagram(d, m, field))?;
    }
    Ok(acc)
}

/// Index of each diagram in the enumeration order, for coefficient vectors.
pub fn diagram_basis_index(n: usize) -> BTreeMap<Diagram, usize> {
    enumerate_diagrams(n)
        .into_iter()
        .enumerate()
        .map(|(i, d)| (d, i))
        .collect()
}

/// Matrix of right multiplication by `d` on the diagram basis: row w gives
/// the coefficients of (basis_w) * d.
pub fn right_multiplication_matrix(
    d: &Diagram,
    m: u32,
    field: FieldSpec,
    basis: &[Diagram],
    index: &BTreeMap<Diagram, usize>,
) -> Mat {
    let dim = basis.len();
    let mut out = Mat::zero(dim, dim, field);
    let delta = field.from_i64(-2 * m as i64);
    for (i, w) in basis.iter().enumerate() {
        let (prod, loops) = w.multiply(d).expect("same n");
        let mut c = field.one();
        for _ in 0..loops {
            c = c.mul_unchecked(&delta);
        }
        out.set(i, index[&prod], c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_are_double_factorials() {
        assert_eq!(dimension(1), 1);
        assert_eq!(dimension(2), 3);
        assert_eq!(dimension(3), 15);
        assert_eq!(dimension(4), 105);
        assert_eq!(dimension(5), 945);
        for n in 1..=5 {
            assert_eq!(enumerate_diagrams(n).len() as u128, dimension(n));
        }
    }

    #[test]
    fn generator_diagrams_match_the_pictures() {
        // s_1 at n=2: cross; e_1 at n=2: cup over cap
        let s1 = generator(Gen::S(1), 2).unwrap();
        assert_eq!(s1.pairs(), vec![(0, 3), (1, 2)]);
        let e1 = generator(Gen::E(1), 2).unwrap();
        assert_eq!(e1.pairs(), vec![(0, 1), (2, 3)]);
        assert!(generator(Gen::S(2), 2).is_err());
    }

    #[test]
    fn e1_squared_gives_one_loop() {
        let e1 = generator(Gen::E(1), 2).unwrap();
        let (d, loops) = e1.multiply(&e1).unwrap();
        assert_eq!(d, e1);
        assert_eq!(loops, 1);
    }

    #[test]
    fn identity_multiplication_is_neutral() {
        for d in enumerate_diagrams(3) {
            let id = Diagram::identity(3);
            assert_eq!(id.multiply(&d).unwrap(), (d.clone(), 0));
            assert_eq!(d.multiply(&id).unwrap(), (d.clone(), 0));
        }
    }

    #[test]
    fn e1_e2_e1_contracts_to_e1() {
        let e1 = generator(Gen::E(1), 3).unwrap();
        let e2 = generator(Gen::E(2), 3).unwrap();
        let (d, l1) = e1.multiply(&e2).unwrap();
        let (d, l2) = d.multiply(&e1).unwrap();
        assert_eq!(d, e1);
        assert_eq!(l1 + l2, 0);
    }

    #[test]
    fn s1_squared_is_identity_element() {
        let f = FieldSpec::Rationals;
        let w = evaluate_word(&[Gen::S(1), Gen::S(1)], 2, 1, f).unwrap();
        assert_eq!(w, BrauerElt::one(2, 1, f));
    }

    #[test]
    fn e_squared_scales_by_delta() {
        let f = FieldSpec::Rationals;
        for m in [1u32, 2, 3] {
            let e = BrauerElt::from_diagram(generator(Gen::E(1), 2).unwrap(), m, f);
            let sq = e.mul(&e).unwrap();
            assert_eq!(sq, e.scale(&f.from_i64(-2 * m as i64)));
        }
    }

    /// All nine defining relation families, as diagram identities.
    fn check_relations(n: usize) {
        let f = FieldSpec::Rationals;
        let m = 1u32;
        let elt = |w: &[Gen]| evaluate_word(w, n, m, f).unwrap();
        let delta = f.from_i64(-2);
        use Gen::{E, S};
        for i in 1..n {
            assert_eq!(elt(&[S(i), S(i)]), BrauerElt::one(n, m, f), "s_i^2 = 1");
            assert_eq!(
                elt(&[E(i), E(i)]),
                elt(&[E(i)]).scale(&delta),
                "e_i^2 = -2m e_i"
            );
            assert_eq!(elt(&[E(i), S(i)]), elt(&[E(i)]), "e_i s_i = e_i");
            assert_eq!(elt(&[S(i), E(i)]), elt(&[E(i)]), "s_i e_i = e_i");
        }
        for i in 1..n {
            for j in i + 2..n {
                assert_eq!(elt(&[S(i), S(j)]), elt(&[S(j), S(i)]), "distant s commute");
                assert_eq!(elt(&[S(i), E(j)]), elt(&[E(j), S(i)]), "distant s,e commute");
                assert_eq!(elt(&[E(i), E(j)]), elt(&[E(j), E(i)]), "distant e commute");
            }
        }
        for i in 1..n.saturating_sub(1) {
            assert_eq!(
                elt(&[S(i), S(i + 1), S(i)]),
                elt(&[S(i + 1), S(i), S(i + 1)]),
                "braid"
            );
            assert_eq!(elt(&[E(i), E(i + 1), E(i)]), elt(&[E(i)]), "e_i e_{{i+1}} e_i");
            assert_eq!(
                elt(&[E(i + 1), E(i), E(i + 1)]),
                elt(&[E(i + 1)]),
                "e_{{i+1}} e_i e_{{i+1}}"
            );
            assert_eq!(
                elt(&[S(i), E(i + 1), E(i)]),
                elt(&[S(i + 1), E(i)]),
                "s_i e_{{i+1}} e_i = s_{{i+1}} e_i"
            );
            assert_eq!(
                elt(&[E(i + 1), E(i), S(i + 1)]),
                elt(&[E(i + 1), S(i)]),
                "e_{{i+1}} e_i s_{{i+1}} = e_{{i+1}} s_i"
            );
        }
    }

    #[test]
    fn defining_relations_hold_up_to_n5() {
        for n in 2..=5 {
            check_relations(n);
        }
    }

    #[test]
    fn multiplication_is_associative_exhaustive_n2() {
        let f = FieldSpec::Rationals;
        let ds = enumerate_diagrams(2);
        for a in &ds {
            for b in &ds {
                for c in &ds {
                    let ea = BrauerElt::from_diagram(a.clone(), 1, f);
                    let eb = BrauerElt::from_diagram(b.clone(), 1, f);
                    let ec = BrauerElt::from_diagram(c.clone(), 1, f);
                    let l = ea.mul(&eb).unwrap().mul(&ec).unwrap();
                    let r = ea.mul(&eb.mul(&ec).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn multiplication_is_associative_sampled_n4() {
        let f = FieldSpec::Rationals;
        let ds = enumerate_diagrams(4);
        // deterministic sample of triples
        let mut state = 77u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for _ in 0..60 {
            let a = &ds[next() % ds.len()];
            let b = &ds[next() % ds.len()];
            let c = &ds[next() % ds.len()];
            let ea = BrauerElt::from_diagram(a.clone(), 2, f);
            let eb = BrauerElt::from_diagram(b.clone(), 2, f);
            let ec = BrauerElt::from_diagram(c.clone(), 2, f);
            let l = ea.mul(&eb).unwrap().mul(&ec).unwrap();
            let r = ea.mul(&eb.mul(&ec).unwrap()).unwrap();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn factorization_reproduces_every_diagram_up_to_n4() {
        let f = FieldSpec::Rationals;
        for n in 1..=4 {
            for d in enumerate_diagrams(n) {
                let word = d.factor_into_generators();
                let elt = evaluate_word(&word, n, 1, f).unwrap();
                assert_eq!(
                    elt,
                    BrauerElt::from_diagram(d.clone(), 1, f),
                    "bad factorization for {d}"
                );
            }
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        let e1 = generator(Gen::E(1), 2).unwrap();
        assert_eq!(e1.to_string(), "[(1,2),(1',2')]");
        for d in enumerate_diagrams(3) {
            let s = d.to_string();
            assert_eq!(parse_diagram(&s, 3).unwrap(), d);
        }
    }

    #[test]
    fn flip_is_an_anti_involution() {
        let ds = enumerate_diagrams(3);
        for a in &ds {
            assert_eq!(a.flip().flip(), *a);
            for b in &ds {
                let (ab, l1) = a.multiply(b).unwrap();
                let (ba_f, l2) = b.flip().multiply(&a.flip()).unwrap();
                assert_eq!(ab.flip(), ba_f);
                assert_eq!(l1, l2);
            }
        }
    }
}
