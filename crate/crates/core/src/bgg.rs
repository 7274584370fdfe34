//! Shapes of relative BGG sequences.
//!
//! For a pair `q ⊂ p` the relevant Weyl group is `W_L`, generated by the
//! reflections in nodes not crossed for `p`. The bundles of a relative BGG
//! sequence are indexed by the minimal-length representatives of the cosets
//! `W_J w` in `W_L`, where `J` is the set of nodes not crossed for `q`; these
//! are exactly the `w ∈ W_L` for which `w(ρ)` is `J`-dominant. The bundle for
//! `w` carries the weight `w·λ = w(λ + ρ) − ρ`, and an arrow `w → s_β w`
//! is an operator of order `<w·λ + ρ, β^∨>`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::dynkin::{validate_label, DynkinLabel, Role};
use crate::error::{Error, Result};
use crate::grading::ParabolicPair;
use crate::roots::{Root, RootSystem, Weight};

/// A word in simple reflections, composed as functions: `[2, 3]` is
/// `s₂ ∘ s₃`, so `s₃` acts first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeylWord {
    gens: Vec<usize>,
}

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord { gens: Vec::new() }
    }

    pub fn new(gens: Vec<usize>) -> Self {
        WeylWord { gens }
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    /// Number of generators; the Coxeter length when the word is reduced.
    pub fn length(&self) -> usize {
        self.gens.len()
    }

    pub fn is_identity(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylWord) -> WeylWord {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        WeylWord { gens }
    }

    /// `self ∘ s_node`.
    pub fn then_reflect_first(&self, node: usize) -> WeylWord {
        let mut gens = self.gens.clone();
        gens.push(node);
        WeylWord { gens }
    }

    pub fn inverse(&self) -> WeylWord {
        WeylWord {
            gens: self.gens.iter().rev().copied().collect(),
        }
    }

    /// Linear action on weights.
    pub fn act(&self, rs: &RootSystem, w: &Weight) -> Result<Weight> {
        let mut out = w.clone();
        for &g in self.gens.iter().rev() {
            out = rs.reflect(g, &out)?;
        }
        Ok(out)
    }

    /// Linear action on roots.
    pub fn act_on_root(&self, rs: &RootSystem, root: &Root) -> Result<Root> {
        let mut out = root.clone();
        for &g in self.gens.iter().rev() {
            out = rs.reflect_root(g, &out)?;
        }
        Ok(out)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| format!("s{g}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// The ρ-shifted action `w·λ = w(λ + ρ) − ρ`.
pub fn affine_act(w: &WeylWord, lambda: &Weight, rs: &RootSystem) -> Result<Weight> {
    let shifted = lambda.checked_add(rs.rho())?;
    w.act(rs, &shifted)?.checked_sub(rs.rho())
}

/// `w_to = s_root ∘ w_from` with `ℓ(w_to) = ℓ(w_from) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseArrow {
    pub from: usize,
    pub to: usize,
    pub root: Root,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    pub pair: ParabolicPair,
    /// Sorted by length, then lexicographically by word.
    pub elements: Vec<WeylWord>,
    pub arrows: Vec<HasseArrow>,
    /// `k ↦ β` with `elements[k+1] = s_β ∘ elements[k]`, where such an arrow exists.
    pub connecting_roots: BTreeMap<usize, Root>,
}

impl HasseDiagram {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Every consecutive pair is joined by an arrow and there are no others.
    pub fn is_chain(&self) -> bool {
        self.connecting_roots.len() + 1 == self.elements.len()
            && self.arrows.len() == self.connecting_roots.len()
    }
}

/// Enumerate the relative Hasse diagram of a pair.
///
/// Elements are grown by right multiplication `w ↦ w ∘ s_i` (`i` uncrossed for
/// `p`), kept when the length goes up and `w(ρ)` stays `J`-dominant. Prefixes
/// of reduced words of such elements are again such elements, so this reaches
/// all of them with reduced words.
pub fn relative_hasse(pair: &ParabolicPair) -> Result<HasseDiagram> {
    let rs = pair.root_system();
    let r = rs.rank();
    let levi: Vec<usize> = (1..=r).filter(|n| !pair.sigma_p().contains(n)).collect();
    let j_nodes: Vec<usize> = (1..=r).filter(|n| !pair.sigma_q().contains(n)).collect();
    let j_dominant = |mu: &Weight| j_nodes.iter().all(|&j| mu.at(j) > 0);

    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    seen.insert(rs.rho().clone());
    let mut elements: Vec<(WeylWord, Weight)> = vec![(WeylWord::identity(), rs.rho().clone())];
    let mut level = elements.clone();
    while !level.is_empty() {
        let mut next: Vec<(WeylWord, Weight)> = Vec::new();
        for (word, _) in &level {
            for &i in &levi {
                let image = word.act_on_root(rs, &Root::simple(r, i))?;
                if !image.is_positive() {
                    continue;
                }
                let longer = word.then_reflect_first(i);
                let mu = longer.act(rs, rs.rho())?;
                if j_dominant(&mu) && seen.insert(mu.clone()) {
                    next.push((longer, mu));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        elements.extend(next.iter().cloned());
        level = next;
    }

    let levi_roots: Vec<&Root> = rs
        .positive_roots()
        .iter()
        .filter(|b| b.support().iter().all(|n| !pair.sigma_p().contains(n)))
        .collect();
    let index: BTreeMap<&Weight, usize> = elements
        .iter()
        .enumerate()
        .map(|(k, (_, mu))| (mu, k))
        .collect();
    let mut arrows = Vec::new();
    for (a, (wa, mua)) in elements.iter().enumerate() {
        for beta in &levi_roots {
            let image = rs.reflect_in_root(beta, mua)?;
            if let Some(&b) = index.get(&image) {
                if elements[b].0.length() == wa.length() + 1 {
                    arrows.push(HasseArrow {
                        from: a,
                        to: b,
                        root: (*beta).clone(),
                    });
                }
            }
        }
    }
    arrows.sort_by_key(|arr| (arr.from, arr.to));
    let connecting_roots = arrows
        .iter()
        .filter(|arr| arr.to == arr.from + 1)
        .map(|arr| (arr.from, arr.root.clone()))
        .collect();

    Ok(HasseDiagram {
        pair: pair.clone(),
        elements: elements.into_iter().map(|(w, _)| w).collect(),
        arrows,
        connecting_roots,
    })
}

/// `<λ_k + ρ, β^∨>`, the order of the operator leaving the bundle `λ_k` along `β`.
pub fn operator_order(lambda_k: &Weight, beta: &Root, rs: &RootSystem) -> Result<i64> {
    rs.pairing(&lambda_k.checked_add(rs.rho())?, beta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BggEntry {
    pub word: WeylWord,
    pub label: DynkinLabel,
    /// Order of the operator to the next entry, if the two are joined.
    pub order_to_next: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BggArrow {
    pub from: usize,
    pub to: usize,
    pub root: Root,
    pub order: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BggSequence {
    pub source: DynkinLabel,
    pub entries: Vec<BggEntry>,
    pub arrows: Vec<BggArrow>,
}

impl BggSequence {
    pub fn labels(&self) -> Vec<&DynkinLabel> {
        self.entries.iter().map(|e| &e.label).collect()
    }

    /// Orders of the operators between consecutive entries.
    pub fn orders(&self) -> Vec<i64> {
        self.entries
            .iter()
            .filter_map(|e| e.order_to_next)
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        self.arrows.len() + 1 == self.entries.len()
            && self.arrows.iter().all(|a| a.to == a.from + 1)
    }
}

/// The relative BGG sequence induced by a `P`-dominant source label.
pub fn relative_bgg_sequence(src: &DynkinLabel, pair: &ParabolicPair) -> Result<BggSequence> {
    if let Some(bad) = match validate_label(src, Role::P, pair)? {
        crate::dynkin::LabelVerdict::Valid => None,
        crate::dynkin::LabelVerdict::Invalid { negative_nodes } => Some(negative_nodes),
    } {
        return Err(Error::LabelMismatch(format!(
            "source {src} is not P-dominant at nodes {bad:?}"
        )));
    }
    let rs = pair.root_system();
    let hasse = relative_hasse(pair)?;
    let mut entries = Vec::with_capacity(hasse.len());
    for w in &hasse.elements {
        let coeffs = affine_act(w, &src.coeffs, rs)?;
        let label = DynkinLabel::new(rs.cartan_type(), pair.sigma_q().clone(), coeffs)?;
        if !validate_label(&label, Role::Q, pair)?.is_valid() {
            return Err(Error::Internal(format!(
                "bundle {label} for {w} is not Q-dominant"
            )));
        }
        entries.push(BggEntry {
            word: w.clone(),
            label,
            order_to_next: None,
        });
    }
    let mut arrows = Vec::with_capacity(hasse.arrows.len());
    for arr in &hasse.arrows {
        let order = operator_order(&entries[arr.from].label.coeffs, &arr.root, rs)?;
        if order <= 0 {
            return Err(Error::Internal(format!(
                "non-positive order {order} on arrow {} -> {}",
                arr.from, arr.to
            )));
        }
        if arr.to == arr.from + 1 {
            entries[arr.from].order_to_next = Some(order);
        }
        arrows.push(BggArrow {
            from: arr.from,
            to: arr.to,
            root: arr.root.clone(),
            order,
        });
    }
    Ok(BggSequence {
        source: src.clone(),
        entries,
        arrows,
    })
}
