//! The `P`-invariant filtration `g^(i',*)` of a bigraded Lie algebra, its
//! subquotient modules `V_{i'}` with their `Q`-invariant filtrations, and the
//! ranks of the induced tangent-bundle subquotients.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::grading::{Bidegree, Bigrading};

/// `V_{i'} = g^(i',*) / g^(i'+1,*)` together with the dimensions of the images
/// `V_{i'}^{i''}` of `⊕_{j' ≥ i', j'' ≥ i''} g_(j',j'')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleDescriptor {
    pub i_prime: i64,
    pub dim: usize,
    /// `(i'', dim V_{i'}^{i''})`, increasing in `i''`.
    pub filtration_steps: Vec<(i64, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    /// First indices at which the filtration jumps, increasing.
    pub i_prime_range: Vec<i64>,
    /// Bidegrees making up `g^(i',*)`.
    pub components: BTreeMap<i64, Vec<Bidegree>>,
    pub modules: BTreeMap<i64, ModuleDescriptor>,
}

pub fn filtration(bg: &Bigrading) -> FiltrationReport {
    let mut i_prime_range: Vec<i64> = bg.degrees().map(|d| d.i_prime).collect();
    i_prime_range.dedup();

    let mut components = BTreeMap::new();
    let mut modules = BTreeMap::new();
    for &ip in &i_prime_range {
        components.insert(ip, bg.degrees().filter(|d| d.i_prime >= ip).collect());

        let layer: Vec<Bidegree> = bg.degrees().filter(|d| d.i_prime == ip).collect();
        // Modulo g^(i'+1,*) only the layer i' = ip survives.
        let filtration_steps = layer
            .iter()
            .map(|start| {
                let dim = layer
                    .iter()
                    .filter(|d| d.i_dprime >= start.i_dprime)
                    .map(|&d| bg.dim(d))
                    .sum();
                (start.i_dprime, dim)
            })
            .collect();
        modules.insert(
            ip,
            ModuleDescriptor {
                i_prime: ip,
                dim: layer.iter().map(|&d| bg.dim(d)).sum(),
                filtration_steps,
            },
        );
    }
    FiltrationReport {
        i_prime_range,
        components,
        modules,
    }
}

/// Ranks of the tangent-bundle subquotients of a geometry of type `(G, Q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    /// `dim g/q`.
    pub dim_m: usize,
    /// `dim p/q`.
    pub rank_t_rho: usize,
    /// `i' < 0 ↦ dim g^(i',*)/q`.
    pub ranks_t_p: BTreeMap<i64, usize>,
    /// `i' < 0 ↦ rank of T^{i'}_P M / T^{i'+1}_P M`, with `T^0_P M = T_ρ M`.
    pub ranks_v: BTreeMap<i64, usize>,
    /// Ranks of the graded pieces of the tangent bundle of a local leaf space.
    pub leaf_graded: BTreeMap<i64, usize>,
}

pub fn tangent_ranks(bg: &Bigrading) -> RankReport {
    let outside_q = |d: Bidegree| !d.in_q();
    let dim_m = bg.dim_where(outside_q);
    let rank_t_rho = bg.dim_where(|d| d.is_relative_tangent());
    let (lo, _) = bg.i_prime_bounds();

    let mut ranks_t_p = BTreeMap::new();
    for ip in lo..0 {
        ranks_t_p.insert(ip, bg.dim_where(|d| outside_q(d) && d.i_prime >= ip));
    }
    let t_p = |ip: i64| -> usize {
        if ip == 0 {
            rank_t_rho
        } else {
            ranks_t_p[&ip]
        }
    };
    let ranks_v: BTreeMap<i64, usize> = (lo..0).map(|ip| (ip, t_p(ip) - t_p(ip + 1))).collect();
    // On a leaf space gr_{i'}(TN) pulls back to V_{i'}M.
    let leaf_graded = ranks_v.clone();
    RankReport {
        dim_m,
        rank_t_rho,
        ranks_t_p,
        ranks_v,
        leaf_graded,
    }
}
