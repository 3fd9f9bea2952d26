use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{automorphism_group, enumerate_group, stabilizer_fixing, AutOptions, VertexMap};
use crate::cuts::{enumerate_tn, Cuts};
use crate::error::{Error, Result};
use crate::graph::{build_bt_graph, build_cayley};
use crate::perm::{factorial, Perm, ZeroPerm};
use crate::report::{Check, Report};
use crate::toric::{alpha_power, reverse_map, toric_map_unchecked, Convention, Dihedral};

/// Default largest `n` for the pointwise-stabiliser computation on `Cay`.
pub const DEFAULT_MAX_N_TRIVIAL: usize = 6;

/// Largest `n` accepted by [`phi_check`].
pub const MAX_PHI_N: usize = 6;

/// Each element of the right-invariant toric-reverse group as a vertex map
/// of `Γ̄` (vertices in lexicographic order of `T_n`).
pub fn dihedral_as_vertex_maps(n: usize) -> Result<Vec<(Dihedral, VertexMap)>> {
    if n < 4 {
        return Err(Error::DegreeTooSmall { n, min: 4 });
    }
    let vertices = enumerate_tn(n)?;
    Dihedral::all(n, Convention::Right)
        .into_iter()
        .map(|d| {
            let images = vertices
                .iter()
                .map(|c| d.act_on_cuts(c).map(|img| img.lex_index()))
                .collect::<Result<Vec<_>>>()?;
            Ok((d, VertexMap::from_images(images)?))
        })
        .collect()
}

/// The automorphism group of `Γ̄` is exactly the toric-reverse group.
pub fn check_theorem_aut_bt(n: usize, opts: AutOptions) -> Result<Report> {
    let g = build_bt_graph(n)?;
    let group = automorphism_group(&g, opts)?;
    let want = 2 * (n as u128 + 1);
    let mut report = Report::new();
    report.push(Check::equal(format!("n={n} |Aut(bt graph)| = 2(n+1)"), want, group.order));

    let dihedral = dihedral_as_vertex_maps(n)?;
    let all_auts = dihedral.iter().all(|(_, m)| m.is_automorphism_of(&g));
    report.push(Check::holds(
        format!("n={n} every toric-reverse element is an automorphism"),
        all_auts,
    ));

    let mut dihedral_set: Vec<VertexMap> = dihedral.iter().map(|(_, m)| m.clone()).collect();
    dihedral_set.sort();
    dihedral_set.dedup();
    report.push(Check::equal(
        format!("n={n} toric-reverse elements act as distinct maps"),
        want,
        dihedral_set.len(),
    ));

    let limit = (4 * want as usize).max(64);
    let same = match enumerate_group(g.vertex_count(), &group.generators, limit) {
        Some(elements) => elements == dihedral_set,
        None => false,
    };
    report.push(Check::holds(
        format!("n={n} Aut(bt graph) equals the toric-reverse image"),
        same,
    ));
    Ok(report)
}

/// Outcome of the `N`-triviality computation on `Cay(Sym_n, T_n)`.
#[derive(Clone, Debug)]
pub struct NTrivialOutcome {
    pub n: usize,
    pub full_order: u128,
    pub identity_stabilizer_order: u128,
    pub pointwise_order: u128,
    pub report: Report,
}

/// Computes, on the left-invariant `Cay(Sym_n, T_n)`, the stabiliser of `ι`,
/// the pointwise stabiliser of `{ι} ∪ T_n` and the full automorphism group.
pub fn check_n_trivial(n: usize, max_n: usize) -> Result<NTrivialOutcome> {
    if n > max_n {
        return Err(Error::BoundExceeded {
            what: "N-triviality check",
            n,
            max: max_n,
        });
    }
    let cay = build_cayley(n, Convention::Left, max_n)?;
    let opts = AutOptions {
        max_vertices: cay.vertex_count(),
    };
    let iota = Perm::identity(n).rank() as usize;
    let mut fixed = vec![iota];
    fixed.extend(enumerate_tn(n)?.iter().map(|c| c.to_perm().rank() as usize));

    let pointwise = stabilizer_fixing(&cay, &fixed, opts)?;
    let stab = stabilizer_fixing(&cay, &[iota], opts)?;
    let full = automorphism_group(&cay, opts)?;
    let dihedral_order = 2 * (n as u128 + 1);
    let sym_order = factorial(n) as u128;

    let mut report = Report::new();
    report.push(Check::equal(
        format!("n={n} |pointwise stabiliser of {{iota}} u T_n in Aut(Cay)| (N)"),
        1,
        pointwise.order,
    ));
    report.push(Check::equal(
        format!("n={n} |stabiliser of iota in Aut(Cay)| = 2(n+1)"),
        dihedral_order,
        stab.order,
    ));
    report.push(Check::equal(
        format!("n={n} |Aut(Cay)| = n! * 2(n+1)"),
        sym_order * dihedral_order,
        full.order,
    ));
    report.push(Check::equal(
        format!("n={n} orbit-stabiliser |Aut(Cay)| = |orbit(iota)| * |stab(iota)|"),
        full.order,
        sym_order * stab.order,
    ));
    Ok(NTrivialOutcome {
        n,
        full_order: full.order,
        identity_stabilizer_order: stab.order,
        pointwise_order: pointwise.order,
        report,
    })
}

/// The automorphism `h ∘ f^r` of the left-invariant Cayley graph:
/// `π ↦ f_r(π) ∘ h`.
fn act(h: &Perm, r: usize, p: &Perm) -> Perm {
    toric_map_unchecked(p, r).then_after(h)
}

/// `Φ(h ∘ f^r) = [0 h^{-1}] ∘ α^{n+1-r}`.
pub fn phi_image(h: &Perm, r: usize) -> ZeroPerm {
    let n = h.degree();
    let m = n + 1;
    h.inverse()
        .extend_zero()
        .then_after(&alpha_power(n, (m - r % m) % m))
}

/// Identifies `x ↦ outer(inner(x))` as a pair `(d, s)` with `x ↦ f_s(x) ∘ d`,
/// by evaluating at `ι` and on the probe set.
fn identify(
    n: usize,
    probes: &[Perm],
    composite: impl Fn(&Perm) -> Perm,
) -> Option<(Perm, usize)> {
    let d = composite(&Perm::identity(n));
    let targets: Vec<Perm> = probes.iter().map(&composite).collect();
    let mut found = None;
    for s in 0..=n {
        if probes.iter().zip(&targets).all(|(p, t)| act(&d, s, p) == *t) {
            if found.is_some() {
                return None;
            }
            found = Some(s);
        }
    }
    found.map(|s| (d, s))
}

/// `R(Cay)F ≅ Sym_{n+1}` via `Φ`, and `t = g ∘ w` is a central involution
/// outside `R(Cay)F`. All pairs are checked when `(n+1)!^2 <= exhaustive_limit`,
/// otherwise `samples` random pairs.
pub fn phi_check(n: usize, samples: usize, seed: u64) -> Result<Report> {
    if n > MAX_PHI_N {
        return Err(Error::BoundExceeded {
            what: "phi check",
            n,
            max: MAX_PHI_N,
        });
    }
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    let m = n + 1;
    let perms: Vec<Perm> = Perm::all(n).collect();
    let elements: Vec<(Perm, usize)> = perms
        .iter()
        .flat_map(|h| (0..m).map(move |r| (h.clone(), r)))
        .collect();
    let mut probes: Vec<Perm> = enumerate_tn(n)?.iter().map(Cuts::to_perm).collect();
    probes.push(Perm::reverse(n));

    let mut report = Report::new();

    let pairs: Vec<(usize, usize)> = if n <= 4 {
        (0..elements.len())
            .flat_map(|a| (0..elements.len()).map(move |b| (a, b)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples)
            .map(|_| (rng.gen_range(0..elements.len()), rng.gen_range(0..elements.len())))
            .collect()
    };
    let mut hom_ok = 0usize;
    let mut formula_ok = 0usize;
    for &(a, b) in &pairs {
        let (h, r) = &elements[a];
        let (k, u) = &elements[b];
        let Some((d, s)) = identify(n, &probes, |x| act(h, *r, &act(k, *u, x))) else {
            continue;
        };
        if (u + image_at(k, *r)) % m == s && toric_map_unchecked(k, *r).then_after(h) == d {
            formula_ok += 1;
        }
        if phi_image(&d, s) == phi_image(h, *r).then_after(&phi_image(k, *u)) {
            hom_ok += 1;
        }
    }
    let mode = if n <= 4 { "all" } else { "random" };
    report.push(Check::equal(
        format!("n={n} Phi(ab) = Phi(a)Phi(b) on {mode} pairs"),
        pairs.len(),
        hom_ok,
    ));
    report.push(Check::equal(
        format!("n={n} (h f^r)(k f^u) = (f_r(k) h) f^(u+k_r) on {mode} pairs"),
        pairs.len(),
        formula_ok,
    ));

    let identity_zero = ZeroPerm::identity(n);
    let kernel = elements
        .iter()
        .filter(|(h, r)| phi_image(h, *r) == identity_zero)
        .count();
    report.push(Check::equal(format!("n={n} |ker Phi|"), 1, kernel));

    let image: HashSet<ZeroPerm> = elements.iter().map(|(h, r)| phi_image(h, *r)).collect();
    report.push(Check::equal(
        format!("n={n} |image Phi| = (n+1)!"),
        factorial(m),
        image.len(),
    ));

    // t = g ∘ w sends π to ω ∘ π
    let w = Perm::reverse(n);
    let t = |p: &Perm| reverse_map(&p.then_after(&w));
    let t_is_left_mult = perms.iter().all(|p| t(p) == w.then_after(p));
    let t_involution = perms.iter().all(|p| t(&t(p)) == *p);
    let t_commutes_f = perms
        .iter()
        .all(|p| toric_map_unchecked(&t(p), 1 % m) == t(&toric_map_unchecked(p, 1 % m)));
    let t_commutes_right = perms.iter().all(|h| {
        probes
            .iter()
            .all(|p| t(&p.then_after(h)) == t(p).then_after(h))
    });
    let t_outside = !elements
        .iter()
        .any(|(h, r)| perms.iter().all(|p| act(h, *r, p) == t(p)));
    report.push(Check::holds(format!("n={n} t = g∘w maps pi to w∘pi"), t_is_left_mult));
    report.push(Check::holds(format!("n={n} t is an involution"), t_involution));
    report.push(Check::holds(format!("n={n} t commutes with f"), t_commutes_f));
    report.push(Check::holds(
        format!("n={n} t commutes with right translations"),
        t_commutes_right,
    ));
    report.push(Check::holds(format!("n={n} t lies outside R(Cay)F"), t_outside));
    Ok(report)
}

/// `π_r` with the convention `π_0 = 0`.
fn image_at(p: &Perm, r: usize) -> usize {
    if r == 0 {
        0
    } else {
        p.get(r)
    }
}
