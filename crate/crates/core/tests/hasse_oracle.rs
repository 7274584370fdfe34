//! Type A cross-check: the Weyl group of A_r is S_{r+1} acting on
//! epsilon-coordinates, so the relative Hasse diagram and the bundle labels
//! can be recomputed by brute force over permutations.

use std::collections::BTreeMap;

use proptest::prelude::*;
use relbgg::{
    affine_act, relative_bgg_sequence, relative_hasse, DynkinLabel, ParabolicPair, RootSystem,
    Weight,
};

/// Dynkin coefficients to epsilon-coordinates normalised with last entry 0.
fn to_eps(a: &[i64]) -> Vec<i64> {
    let mut x = vec![0; a.len() + 1];
    for k in (0..a.len()).rev() {
        x[k] = x[k + 1] + a[k];
    }
    x
}

fn from_eps(x: &[i64]) -> Vec<i64> {
    x.windows(2).map(|w| w[0] - w[1]).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `(w x)_{σ(k)} = x_k`.
fn act(sigma: &[usize], x: &[i64]) -> Vec<i64> {
    let mut y = vec![0; x.len()];
    for (k, &s) in sigma.iter().enumerate() {
        y[s] = x[k];
    }
    y
}

fn inversions(y: &[i64]) -> usize {
    (0..y.len())
        .flat_map(|a| (a + 1..y.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| y[a] < y[b])
        .count()
}

fn block_of(pair: &ParabolicPair, r: usize) -> Vec<usize> {
    let mut block = vec![0; r + 1];
    for k in 1..=r {
        block[k] = block[k - 1] + usize::from(pair.sigma_p().contains(&k));
    }
    block
}

struct OracleElement {
    sigma: Vec<usize>,
    rho_image: Vec<i64>,
    length: usize,
}

fn oracle_hasse(pair: &ParabolicPair, r: usize) -> Vec<OracleElement> {
    let block = block_of(pair, r);
    let rho = to_eps(&vec![1; r]);
    permutations(r + 1)
        .into_iter()
        .filter(|s| s.iter().enumerate().all(|(k, &t)| block[k] == block[t]))
        .map(|sigma| {
            let y = act(&sigma, &rho);
            OracleElement {
                length: inversions(&y),
                rho_image: y,
                sigma,
            }
        })
        .filter(|e| {
            (1..=r)
                .filter(|j| !pair.sigma_q().contains(j))
                .all(|j| e.rho_image[j - 1] > e.rho_image[j])
        })
        .collect()
}

fn check_pair(pair: &ParabolicPair, sources: &[Vec<i64>]) {
    let rs = pair.root_system();
    let r = rs.rank();
    let hasse = relative_hasse(pair).unwrap();
    let oracle = oracle_hasse(pair, r);
    assert_eq!(hasse.len(), oracle.len(), "{pair}");

    let by_image: BTreeMap<Vec<i64>, &OracleElement> =
        oracle.iter().map(|e| (from_eps(&e.rho_image), e)).collect();
    let mut matched = Vec::new();
    for w in &hasse.elements {
        let img = w.act(rs, rs.rho()).unwrap().into_inner();
        let e = by_image
            .get(&img)
            .unwrap_or_else(|| panic!("{pair}: {w} not minimal"));
        assert_eq!(w.length(), e.length, "{pair}: {w} is not reduced");
        matched.push(*e);
    }
    for pair_of in hasse.elements.windows(2) {
        assert!(pair_of[0].length() <= pair_of[1].length());
    }

    // Arrows: w -> t w with t a transposition inside a Levi block, length + 1.
    let block = block_of(pair, r);
    let mut expected_arrows = Vec::new();
    for (a, ea) in matched.iter().enumerate() {
        for (b, eb) in matched.iter().enumerate() {
            if eb.length != ea.length + 1 {
                continue;
            }
            let diff: Vec<usize> = (0..=r)
                .filter(|&k| ea.rho_image[k] != eb.rho_image[k])
                .collect();
            if diff.len() == 2
                && block[diff[0]] == block[diff[1]]
                && ea.rho_image[diff[0]] == eb.rho_image[diff[1]]
                && ea.rho_image[diff[1]] == eb.rho_image[diff[0]]
            {
                expected_arrows.push((a, b, diff[0], diff[1]));
            }
        }
    }
    let found: Vec<(usize, usize)> = hasse.arrows.iter().map(|x| (x.from, x.to)).collect();
    let expected: Vec<(usize, usize)> = expected_arrows.iter().map(|x| (x.0, x.1)).collect();
    assert_eq!(found, expected, "{pair}");

    for src in sources {
        let label = DynkinLabel::new(
            rs.cartan_type(),
            pair.sigma_p().clone(),
            Weight::new(src.clone()),
        )
        .unwrap();
        let seq = relative_bgg_sequence(&label, pair).unwrap();
        let shifted: Vec<i64> = src.iter().map(|c| c + 1).collect();
        let z0 = to_eps(&shifted);
        let mut zs = Vec::new();
        for (entry, e) in seq.entries.iter().zip(&matched) {
            let z = act(&e.sigma, &z0);
            let expected: Vec<i64> = from_eps(&z).iter().map(|c| c - 1).collect();
            assert_eq!(entry.label.coeffs.coeffs(), &expected[..], "{pair} {label}");
            zs.push(z);
        }
        for (arrow, &(a, _, i, j)) in seq.arrows.iter().zip(&expected_arrows) {
            assert_eq!(arrow.order, zs[a][i] - zs[a][j], "{pair} {label}");
            assert!(arrow.order > 0);
        }
    }
}

fn dominant_sources(pair: &ParabolicPair, r: usize) -> Vec<Vec<i64>> {
    let patterns: [fn(usize) -> i64; 3] = [
        |_| 0,
        |k| (k % 3) as i64,
        |k| if k % 2 == 0 { -3 } else { 2 },
    ];
    patterns
        .iter()
        .map(|f| {
            (1..=r)
                .map(|k| {
                    let c = f(k);
                    if pair.sigma_p().contains(&k) {
                        c
                    } else {
                        c.abs()
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn hasse_and_labels_match_permutation_oracle() {
    for r in 1..=5 {
        let rs = RootSystem::type_a(r).unwrap();
        for pair in ParabolicPair::all_pairs(&rs) {
            let sources = dominant_sources(&pair, r);
            check_pair(&pair, &sources);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_sources_match_oracle(
        r in 2usize..=4,
        seed in any::<u64>(),
        coeffs in prop::collection::vec(-4i64..=4, 4),
    ) {
        let rs = RootSystem::type_a(r).unwrap();
        let pairs = ParabolicPair::all_pairs(&rs);
        let pair = &pairs[(seed as usize) % pairs.len()];
        let src: Vec<i64> = (1..=r)
            .map(|k| {
                let c = coeffs[k - 1];
                if pair.sigma_p().contains(&k) { c } else { c.abs() }
            })
            .collect();
        check_pair(pair, &[src]);
    }

    #[test]
    fn affine_action_matches_permutations(
        coeffs in prop::collection::vec(-5i64..=5, 4),
        word in prop::collection::vec(1usize..=4, 0..8),
    ) {
        let rs = RootSystem::type_a(4).unwrap();
        let w = relbgg::WeylWord::new(word.clone());
        let lam = Weight::new(coeffs.clone());
        let got = affine_act(&w, &lam, &rs).unwrap();
        let mut z = to_eps(&coeffs.iter().map(|c| c + 1).collect::<Vec<_>>());
        for &g in word.iter().rev() {
            z.swap(g - 1, g);
        }
        let expected: Vec<i64> = from_eps(&z).iter().map(|c| c - 1).collect();
        prop_assert_eq!(got.coeffs(), &expected[..]);
    }
}
