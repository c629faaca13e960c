use std::collections::HashMap;

use hopf_skein::partitions::{basis_labels, lr_coeff, partitions_of, partitions_up_to, syt_count, Partition};

/// Partition numbers by the standard "largest part at most m" recurrence.
fn partition_count(n: usize) -> usize {
    let mut table = vec![vec![0usize; n + 1]; n + 1];
    table[0].fill(1);
    for k in 1..=n {
        for m in 1..=n {
            table[k][m] = table[k][m - 1] + if m <= k { table[k - m][m] } else { 0 };
        }
    }
    table[n][n]
}

/// Counts standard fillings by trying every permutation of `1..=n`.
fn syt_brute_force(lambda: &Partition) -> u64 {
    fn permutations(items: &mut Vec<usize>, k: usize, out: &mut dyn FnMut(&[usize])) {
        if k == items.len() {
            out(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permutations(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let cells = lambda.cells();
    let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut values: Vec<usize> = (1..=cells.len()).collect();
    let mut count = 0;
    permutations(&mut values, 0, &mut |fill| {
        let ok = cells.iter().all(|&(i, j)| {
            let here = fill[index[&(i, j)]];
            let right = index.get(&(i, j + 1)).is_none_or(|&r| fill[r] > here);
            let below = index.get(&(i + 1, j)).is_none_or(|&b| fill[b] > here);
            right && below
        });
        count += u64::from(ok);
    });
    count
}

type Poly = HashMap<Vec<u8>, i64>;

/// The Schur polynomial `s_λ(x_1..x_m)` as a sum over semistandard tableaux.
fn schur(lambda: &Partition, m: usize) -> Poly {
    let cells = lambda.cells();
    let mut out = Poly::new();
    let mut fill = vec![0u8; cells.len()];
    let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        index: &HashMap<(usize, usize), usize>,
        fill: &mut Vec<u8>,
        m: usize,
        out: &mut Poly,
    ) {
        if k == cells.len() {
            let mut mono = vec![0u8; m];
            for &v in fill.iter() {
                mono[v as usize] += 1;
            }
            *out.entry(mono).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[k];
        // cells are in row-major order, so left and upper neighbours are filled
        let min_left = if j > 1 { fill[index[&(i, j - 1)]] } else { 0 };
        let min_up = if i > 1 { fill[index[&(i - 1, j)]] + 1 } else { 0 };
        for v in min_left.max(min_up)..m as u8 {
            fill[k] = v;
            rec(k + 1, cells, index, fill, m, out);
        }
    }
    rec(0, &cells, &index, &mut fill, m, &mut out);
    out
}

fn multiply(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mono: Vec<u8> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            *out.entry(mono).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands a symmetric polynomial in Schur polynomials by repeatedly peeling
/// off the lexicographically largest monomial.
fn schur_expand(mut p: Poly, m: usize) -> HashMap<Partition, i64> {
    let mut out = HashMap::new();
    while let Some((mono, &c)) = p.iter().max_by(|x, y| x.0.cmp(y.0)) {
        let parts: Vec<usize> = mono.iter().map(|&e| e as usize).filter(|&e| e > 0).collect();
        let lambda = Partition::new(parts).expect("leading monomial of a symmetric polynomial");
        for (mono, coeff) in schur(&lambda, m) {
            *p.entry(mono).or_insert(0) -= c * coeff;
        }
        p.retain(|_, c| *c != 0);
        out.insert(lambda, c);
    }
    out
}

#[test]
fn partition_counts() {
    for n in 0..=12 {
        let ps = partitions_of(n);
        assert_eq!(ps.len(), partition_count(n), "n = {n}");
        assert!(ps.windows(2).all(|w| w[0] < w[1]), "strictly ordered for n = {n}");
        assert!(ps.iter().all(|p| p.size() == n));
    }
}

#[test]
fn basis_label_counts() {
    assert_eq!(basis_labels(3, 2).len(), 9);
    for n in 0..=8 {
        for p in 0..=8 {
            let want: usize = (0..=n.min(p))
                .map(|j| partition_count(n - j) * partition_count(p - j))
                .sum();
            let labels = basis_labels(n, p);
            assert_eq!(labels.len(), want, "({n}, {p})");
            assert!(labels.iter().all(|l| l.neg.size() + p == l.pos.size() + n));
        }
    }
}

#[test]
fn syt_counts_match_brute_force() {
    for lambda in partitions_up_to(7) {
        assert_eq!(syt_count(&lambda), syt_brute_force(&lambda), "{lambda}");
    }
}

#[test]
fn syt_branching_rule() {
    for lambda in partitions_up_to(10) {
        if lambda.is_empty() {
            continue;
        }
        let below: u64 = lambda.remove_corner_cells().iter().map(syt_count).sum();
        assert_eq!(syt_count(&lambda), below, "{lambda}");
    }
}

#[test]
fn hook_multisets_are_conjugation_invariant() {
    for lambda in partitions_up_to(9) {
        let mut a = lambda.hook_lengths();
        let mut b = lambda.conjugate().hook_lengths();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{lambda}");
        assert_eq!(lambda.conjugate().conjugate(), lambda);
    }
}

#[test]
fn lr_symmetries() {
    for lambda in partitions_up_to(6) {
        for k in 0..=lambda.size() {
            for mu in partitions_of(k) {
                for nu in partitions_of(lambda.size() - k) {
                    let c = lr_coeff(&lambda, &mu, &nu);
                    assert_eq!(c, lr_coeff(&lambda, &nu, &mu), "{lambda} {mu} {nu}");
                    assert_eq!(c, lr_coeff(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()));
                }
            }
        }
    }
}

#[test]
fn lr_dimension_sum_rule() {
    // Σ_λ c^λ_{μν} d_λ = C(|μ|+|ν|, |μ|) d_μ d_ν
    fn binomial(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }
    for mu in partitions_up_to(4) {
        for nu in partitions_up_to(4) {
            let n = mu.size() + nu.size();
            let lhs: u64 = partitions_of(n)
                .iter()
                .map(|l| lr_coeff(l, &mu, &nu) * syt_count(l))
                .sum();
            let rhs = binomial(n as u64, mu.size() as u64) * syt_count(&mu) * syt_count(&nu);
            assert_eq!(lhs, rhs, "{mu} {nu}");
        }
    }
}

#[test]
fn lr_matches_schur_products() {
    for mu in partitions_up_to(3) {
        for nu in partitions_up_to(3) {
            let n = mu.size() + nu.size();
            if n == 0 || n > 5 {
                continue;
            }
            let product = multiply(&schur(&mu, n), &schur(&nu, n));
            let expansion = schur_expand(product, n);
            for lambda in partitions_of(n) {
                let want = expansion.get(&lambda).copied().unwrap_or(0);
                assert_eq!(lr_coeff(&lambda, &mu, &nu) as i64, want, "c^{lambda}_({mu},{nu})");
            }
        }
    }
}
