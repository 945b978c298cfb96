//! Weight combinatorics of type C_m: dominance order in the simple-root
//! basis, the weight sets attached to the harmonic filtration, and the
//! affine dot action.

/// An integral weight for Sp(2m): a vector in Z^m.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && *self.0.last().unwrap_or(&0) >= 0
    }
}

/// Half sum of the positive roots: (m, m-1, ..., 1).
pub fn rho(m: usize) -> Weight {
    Weight((0..m).map(|i| (m - i) as i64).collect())
}

/// lambda <= mu in the dominance order: mu - lambda is a nonnegative
/// integer combination of the simple roots e_i - e_{i+1} and 2 e_m.
/// Coefficients are the partial sums; the last one needs the total even.
pub fn dominance_leq(lambda: &Weight, mu: &Weight) -> bool {
    assert_eq!(lambda.m(), mu.m());
    let m = lambda.m();
    let mut partial = 0i64;
    for k in 0..m {
        partial += mu.0[k] - lambda.0[k];
        if partial < 0 {
            return false;
        }
        if k + 1 == m && partial % 2 != 0 {
            return false;
        }
    }
    true
}

pub fn dominance_lt(lambda: &Weight, mu: &Weight) -> bool {
    lambda != mu && dominance_leq(lambda, mu)
}

/// Partitions of `total` into at most m parts, as weights.
fn partitions_into(total: i64, m: usize) -> Vec<Weight> {
    fn rec(total: i64, max_part: i64, slots: usize, acc: &mut Vec<i64>, out: &mut Vec<Weight>, m: usize) {
        if total == 0 {
            let mut w = acc.clone();
            w.resize(m, 0);
            out.push(Weight(w));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = max_part.min(total);
        for part in (1..=hi).rev() {
            acc.push(part);
            rec(total - part, part, slots - 1, acc, out, m);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if total < 0 {
        return out;
    }
    rec(total, total.max(0), m, &mut Vec::new(), &mut out, m);
    if total == 0 {
        // rec pushes the empty partition once
    }
    out
}

/// All dominant weights of V^{(x)n}: partitions of n - 2r, 0 <= r <= n/2,
/// with at most m parts.
pub fn lambda_plus(m: usize, n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for r in 0..=n / 2 {
        out.extend(partitions_into(n as i64 - 2 * r as i64, m));
    }
    out
}

/// The weights of the harmonic layer: partitions of n - 2r' with f <= r'.
pub fn lambda_f_plus(m: usize, n: usize, f: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for r in f..=n / 2 {
        out.extend(partitions_into(n as i64 - 2 * r as i64, m));
    }
    out
}

/// The complement of lambda_f_plus inside lambda_plus.
pub fn lambda_f_complement(m: usize, n: usize, f: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for r in 0..f.min(n / 2 + 1) {
        out.extend(partitions_into(n as i64 - 2 * r as i64, m));
    }
    out
}

/// A positive root of type C_m (0-based indices).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Root {
    /// e_i - e_j, i < j
    Diff(usize, usize),
    /// e_i + e_j, i < j
    Sum(usize, usize),
    /// 2 e_i
    Long(usize),
}

impl Root {
    /// <w, beta^vee>.
    pub fn pair(&self, w: &Weight) -> i64 {
        match *self {
            Root::Diff(i, j) => w.0[i] - w.0[j],
            Root::Sum(i, j) => w.0[i] + w.0[j],
            Root::Long(i) => w.0[i],
        }
    }

    /// The root as a vector in Z^m.
    pub fn vec(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0i64; m];
        match *self {
            Root::Diff(i, j) => {
                v[i] = 1;
                v[j] = -1;
            }
            Root::Sum(i, j) => {
                v[i] = 1;
                v[j] = 1;
            }
            Root::Long(i) => v[i] = 2,
        }
        v
    }
}

pub fn positive_roots(m: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            out.push(Root::Diff(i, j));
            out.push(Root::Sum(i, j));
        }
        out.push(Root::Long(i));
    }
    out
}

/// The affine dot action s_{beta, kp} . mu = mu - <mu + rho, beta^vee> beta
/// + k p beta.
pub fn dot_action(mu: &Weight, beta: Root, k: i64, p: u64) -> Weight {
    let m = mu.m();
    let r = rho(m);
    let shifted = Weight((0..m).map(|i| mu.0[i] + r.0[i]).collect());
    let c = beta.pair(&shifted);
    let bv = beta.vec(m);
    Weight(
        (0..m)
            .map(|i| mu.0[i] - c * bv[i] + k * p as i64 * bv[i])
            .collect(),
    )
}

/// Searches for a single strictly increasing dot-reflection step leaving
/// the harmonic weight set: returns true when no mu in Lambda_f^+ reflects
/// up to some nu in the complement (within the finite search box).
pub fn cross_block_separation_check(m: usize, n: usize, f: usize, p: u64) -> bool {
    let inside = lambda_f_plus(m, n, f);
    let complement: std::collections::BTreeSet<Weight> =
        lambda_f_complement(m, n, f).into_iter().collect();
    let valid_sums: Vec<i64> = (0..=n / 2).map(|r| n as i64 - 2 * r as i64).collect();
    let roots = positive_roots(m);
    for mu in &inside {
        for &beta in &roots {
            let r = rho(m);
            let shifted = Weight((0..m).map(|i| mu.0[i] + r.0[i]).collect());
            let c = beta.pair(&shifted).unsigned_abs();
            // weights of V^(x)n have coordinates bounded by n; reflections
            // landing farther out cannot lie in the weight set
            let bound = ((c + 2 * n as u64 + 2 * m as u64) / p + 1) as i64;
            for k in -bound..=bound {
                let nu = dot_action(mu, beta, k, p);
                if !nu.is_dominant() || !valid_sums.contains(&nu.sum()) {
                    continue;
                }
                if dominance_lt(mu, &nu) && complement.contains(&nu) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominance_from_the_simple_root_basis() {
        // 2 e_1 = 2(e_1 - e_2) + (2 e_2), so (0,0) <= (2,0) but not conversely
        let zero = Weight(vec![0, 0]);
        let two = Weight(vec![2, 0]);
        assert!(dominance_leq(&zero, &two));
        assert!(!dominance_leq(&two, &zero));
        // odd total difference is never comparable
        assert!(!dominance_leq(&Weight(vec![1, 0]), &Weight(vec![2, 0])));
    }

    #[test]
    fn lambda_sets_m1_n2() {
        assert_eq!(lambda_f_plus(1, 2, 1), vec![Weight(vec![0])]);
        assert_eq!(lambda_f_complement(1, 2, 1), vec![Weight(vec![2])]);
        let all = lambda_plus(1, 2);
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn dot_action_at_k_zero_is_the_finite_reflection() {
        let mu = Weight(vec![3, 1]);
        let beta = Root::Diff(0, 1);
        // <mu + rho, beta^vee> with rho = (2,1): (3+2) - (1+1) = 3
        let nu = dot_action(&mu, beta, 0, 5);
        assert_eq!(nu, Weight(vec![3 - 3, 1 + 3]));
    }

    #[test]
    fn lemma_order_small_cases() {
        // partitions of n-2a never lie below partitions of n-2b when a < b
        let n = 4;
        for m in 1..=3 {
            for a in 0..=n / 2 {
                for b in a + 1..=n / 2 {
                    for lam in partitions_into((n - 2 * a) as i64, m) {
                        for mu in partitions_into((n - 2 * b) as i64, m) {
                            assert!(!dominance_leq(&lam, &mu), "{lam:?} <= {mu:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn separation_holds_at_good_primes() {
        assert!(cross_block_separation_check(1, 2, 1, 5));
        assert!(cross_block_separation_check(2, 3, 1, 7));
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for m in 1..=4 {
            let mut acc = vec![0i64; m];
            for beta in positive_roots(m) {
                for (i, v) in beta.vec(m).iter().enumerate() {
                    acc[i] += v;
                }
            }
            let half: Vec<i64> = acc.iter().map(|x| x / 2).collect();
            assert_eq!(Weight(half), rho(m));
        }
    }
}
