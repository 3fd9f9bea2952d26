//! Named verification suites. Each suite returns a [`Report`] of
//! `CLAIM … EXPECTED … GOT … PASS|FAIL` lines for one degree `n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::aut::{self, AutOptions, DEFAULT_MAX_N_TRIVIAL};
use crate::cuts::{enumerate_tn, tn_size, Cuts, PartitionClass};
use crate::error::{Error, Result};
use crate::graph::{
    build_bt_graph, build_bt_graph_with, build_btv_graph, build_cayley, class_vertices,
    expected_em_edges, hamiltonian_cycle_v, vertex_set_v, DEFAULT_MAX_CAYLEY_N,
};
use crate::perm::Perm;
use crate::report::{Check, Report};
use crate::toric::{reverse_map, toric_map, Convention, Dihedral};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Partition,
    Toric,
    Regularity,
    Bipartite,
    Cliques,
    Hamiltonian,
    AutBt,
    DihedralRegularOnV,
    Phi,
    NTrivial,
    All,
}

impl Suite {
    pub const SINGLE: [Suite; 10] = [
        Suite::Partition,
        Suite::Toric,
        Suite::Regularity,
        Suite::Bipartite,
        Suite::Cliques,
        Suite::Hamiltonian,
        Suite::AutBt,
        Suite::DihedralRegularOnV,
        Suite::Phi,
        Suite::NTrivial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Partition => "partition",
            Suite::Toric => "toric",
            Suite::Regularity => "regularity",
            Suite::Bipartite => "bipartite",
            Suite::Cliques => "cliques",
            Suite::Hamiltonian => "hamiltonian",
            Suite::AutBt => "aut_bt",
            Suite::DihedralRegularOnV => "dihedral_regular_on_V",
            Suite::Phi => "phi",
            Suite::NTrivial => "n_trivial",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::SINGLE
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest `n` for which `Cay(Sym_n, T_n)` is built.
    pub max_cayley_n: usize,
    /// Largest `n` for the `N`-triviality computation.
    pub max_n_trivial: usize,
    /// Random samples used where exhaustive checks are too large.
    pub samples: usize,
    pub phi_samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_cayley_n: DEFAULT_MAX_CAYLEY_N,
            max_n_trivial: DEFAULT_MAX_N_TRIVIAL,
            samples: 10_000,
            phi_samples: 1000,
            seed: 2015,
        }
    }
}

impl VerifyOptions {
    /// One override for every Cayley-graph bound.
    pub fn with_max_cayley_n(mut self, max: usize) -> Self {
        self.max_cayley_n = max;
        self.max_n_trivial = max;
        self
    }
}

/// Runs one suite. `All` runs every suite whose preconditions hold at `n`
/// and whose bounds allow it.
pub fn run(suite: Suite, n: usize, opts: &VerifyOptions) -> Result<Report> {
    match suite {
        Suite::Partition => partition(n),
        Suite::Toric => toric(n, opts),
        Suite::Regularity => regularity(n, opts),
        Suite::Bipartite => bipartite(n),
        Suite::Cliques => cliques(n),
        Suite::Hamiltonian => hamiltonian(n),
        Suite::AutBt => aut_bt(n),
        Suite::DihedralRegularOnV => dihedral_regular_on_v(n),
        Suite::Phi => aut::phi_check(n, opts.phi_samples, opts.seed),
        Suite::NTrivial => Ok(aut::check_n_trivial(n, opts.max_n_trivial)?.report),
        Suite::All => {
            let mut report = Report::new();
            for s in Suite::SINGLE {
                if included_in_all(s, n, opts) {
                    report.extend(run(s, n, opts)?);
                }
            }
            Ok(report)
        }
    }
}

fn included_in_all(s: Suite, n: usize, opts: &VerifyOptions) -> bool {
    match s {
        Suite::Partition | Suite::Toric => n >= 2,
        Suite::Regularity | Suite::Bipartite | Suite::Cliques | Suite::Hamiltonian | Suite::AutBt => {
            n >= 4
        }
        Suite::DihedralRegularOnV => n >= 5,
        Suite::Phi => (2..=aut::MAX_PHI_N).contains(&n),
        Suite::NTrivial => n >= 2 && n <= opts.max_n_trivial && n <= opts.max_cayley_n,
        Suite::All => false,
    }
}

fn require(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::DegreeTooSmall { n, min })
    } else {
        Ok(())
    }
}

fn cuts(n: usize, i: usize, j: usize, k: usize) -> Cuts {
    Cuts::new(n, i, j, k).expect("valid cut points")
}

/// Size of `T_n`, the class sizes and the structure of `B`.
pub fn partition(n: usize) -> Result<Report> {
    require(n, 2)?;
    let all = enumerate_tn(n)?;
    let mut r = Report::new();
    r.push(Check::equal(
        format!("n={n} |T_n| = n(n+1)(n-1)/6"),
        n * (n + 1) * (n - 1) / 6,
        all.len(),
    ));
    let distinct: BTreeSet<Perm> = all.iter().map(Cuts::to_perm).collect();
    r.push(Check::equal(
        format!("n={n} cut triples give distinct permutations"),
        tn_size(n),
        distinct.len(),
    ));
    if n < 4 {
        return Ok(r);
    }
    let mut sizes: BTreeMap<PartitionClass, usize> = BTreeMap::new();
    for c in &all {
        *sizes.entry(c.class()).or_default() += 1;
    }
    for class in PartitionClass::ALL {
        r.push(Check::equal(
            format!("n={n} |{class}|"),
            class.expected_size(n),
            sizes.get(&class).copied().unwrap_or(0),
        ));
    }
    let beta = cuts(n, 0, 1, n).to_perm();
    let mut powers = BTreeSet::new();
    let mut x = beta.clone();
    while !x.is_identity() {
        powers.insert(x.clone());
        x = x.then_after(&beta);
    }
    let b: BTreeSet<Perm> = all
        .iter()
        .filter(|c| c.class() == PartitionClass::B)
        .map(Cuts::to_perm)
        .collect();
    r.push(Check::holds(format!("n={n} B is the set of non-trivial powers of beta"), powers == b));
    let swaps = all.iter().all(|c| {
        let img = Cuts::from_perm(&reverse_map(&c.to_perm())).expect("T_n is closed under g");
        match c.class() {
            PartitionClass::L => img.class() == PartitionClass::F,
            PartitionClass::F => img.class() == PartitionClass::L,
            other => img.class() == other,
        }
    });
    r.push(Check::holds(
        format!("n={n} reverse map swaps L and F, preserves B and S"),
        swaps,
    ));
    Ok(r)
}

fn random_perms(n: usize, count: usize, rng: &mut ChaCha8Rng) -> Vec<Perm> {
    (0..count)
        .map(|_| {
            let mut v: Vec<usize> = (1..=n).collect();
            v.shuffle(rng);
            Perm::from_one_line(&v).expect("shuffle of 1..=n")
        })
        .collect()
}

fn image_at(p: &Perm, r: usize) -> usize {
    if r == 0 {
        0
    } else {
        p.get(r)
    }
}

/// Toric algebra: closed forms on cut points, the group law of `F`, the
/// reflection relation, the composition lemmas and the pointwise formula.
/// Exhaustive for `n <= 5`, sampled above.
pub fn toric(n: usize, opts: &VerifyOptions) -> Result<Report> {
    require(n, 2)?;
    let m = n + 1;
    let mut r = Report::new();
    let exhaustive = n <= 5;
    let mode = if exhaustive {
        "exhaustive".to_string()
    } else {
        format!("{} samples", opts.samples)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (perms, pairs): (Vec<Perm>, Vec<(Perm, Perm)>) = if exhaustive {
        let all: Vec<Perm> = Perm::all(n).collect();
        let pairs = all
            .iter()
            .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        (all, pairs)
    } else {
        let a = random_perms(n, opts.samples, &mut rng);
        let b = random_perms(n, opts.samples, &mut rng);
        (a.clone(), a.into_iter().zip(b).collect())
    };

    let tn = enumerate_tn(n)?;
    for conv in [Convention::Right, Convention::Left] {
        let mut agree = 0usize;
        let mut total = 0usize;
        for d in Dihedral::all(n, conv) {
            for c in &tn {
                total += 1;
                let by_perm = Cuts::from_perm(&d.apply(&c.to_perm())?);
                if by_perm == Some(d.act_on_cuts(c)?) {
                    agree += 1;
                }
            }
        }
        r.push(Check::equal(
            format!("n={n} closed-form action = conjugation on T_n ({conv:?} convention)"),
            total,
            agree,
        ));
    }

    let count = |ok: &dyn Fn(&Perm) -> bool| perms.iter().filter(|p| ok(p)).count();
    let total = perms.len();
    let f = |p: &Perm, r: usize| toric_map(p, r % m).expect("rotation in range");

    r.push(Check::equal(
        format!("n={n} f_s(f_r(pi)) = f_(s+r)(pi) [{mode}]"),
        total,
        count(&|p| (0..m).all(|a| (0..m).all(|b| f(&f(p, a), b) == f(p, a + b)))),
    ));
    r.push(Check::equal(
        format!("n={n} g f_r g = f_(n+1-r) [{mode}]"),
        total,
        count(&|p| (0..m).all(|a| reverse_map(&f(&reverse_map(p), a)) == f(p, m - a))),
    ));
    r.push(Check::equal(
        format!("n={n} f_r(pi) = pointwise formula pi_(r+t) - pi_r [{mode}]"),
        total,
        count(&|p| {
            (0..m).all(|a| {
                let q = f(p, a);
                (1..=n).all(|t| {
                    let v = (image_at(p, (a + t) % m) + m - image_at(p, a)) % m;
                    q.get(t) == v
                })
            })
        }),
    ));
    r.push(Check::equal(
        format!("n={n} f_r(pi)^-1 = f_(pi_r)(pi^-1) [{mode}]"),
        total,
        count(&|p| (0..m).all(|a| f(p, a).inverse() == f(&p.inverse(), image_at(p, a)))),
    ));
    r.push(Check::equal(
        format!("n={n} right toric map f-bar(pi) = f^(pi^-1_1)(pi) [{mode}]"),
        total,
        count(&|p| {
            let right = Dihedral::rotation(n, Convention::Right).apply(p).expect("degree");
            right == f(p, p.inverse().get(1))
        }),
    ));

    let pair_total = pairs.len();
    let pair_mode = if exhaustive {
        "all pairs".to_string()
    } else {
        format!("{pair_total} sampled pairs")
    };
    let composition = pairs
        .iter()
        .filter(|(rho, pi)| {
            let prod = rho.then_after(pi);
            (0..m).all(|a| f(&prod, a) == f(rho, image_at(pi, a)).then_after(&f(pi, a)))
        })
        .count();
    r.push(Check::equal(
        format!("n={n} f_r(rho pi) = f_(pi_r)(rho) f_r(pi) [{pair_mode}]"),
        pair_total,
        composition,
    ));
    let reverse_hom = pairs
        .iter()
        .filter(|(rho, pi)| reverse_map(&rho.then_after(pi)) == reverse_map(rho).then_after(&reverse_map(pi)))
        .count();
    r.push(Check::equal(
        format!("n={n} g(rho pi) = g(rho) g(pi) [{pair_mode}]"),
        pair_total,
        reverse_hom,
    ));

    if n >= 5 {
        let (ok, total) = rotation_identities(n)?;
        r.push(Check::equal(
            format!("n={n} f-bar power identities moving L u B into S"),
            total,
            ok,
        ));
    }
    Ok(r)
}

/// The identities `f̄^2(σ(0,j,k)) = σ(j-2,k-2,n-1)` and companions, with
/// `f̄` evaluated by conjugation. Returns `(holding, total)`.
pub fn rotation_identities(n: usize) -> Result<(usize, usize)> {
    require(n, 5)?;
    let mut cases: Vec<(usize, Cuts, Cuts)> = Vec::new();
    for j in 3..n {
        for k in j + 1..=n {
            cases.push((2, cuts(n, 0, j, k), cuts(n, j - 2, k - 2, n - 1)));
        }
    }
    for k in 4..=n {
        cases.push((3, cuts(n, 0, 1, k), cuts(n, k - 3, n - 2, n - 1)));
    }
    cases.push((4, cuts(n, 0, 1, 2), cuts(n, n - 3, n - 2, n - 1)));
    cases.push((5, cuts(n, 0, 1, 3), cuts(n, n - 4, n - 3, n - 1)));
    for k in 5..=n {
        cases.push((4, cuts(n, 0, 2, k), cuts(n, k - 4, n - 3, n - 1)));
    }
    cases.push((5, cuts(n, 0, 2, 3), cuts(n, n - 4, n - 2, n - 1)));
    cases.push((6, cuts(n, 0, 2, 4), cuts(n, n - 5, n - 3, n - 1)));
    let mut ok = 0;
    for (power, from, to) in &cases {
        let d = Dihedral::new(n, power % (n + 1), false, Convention::Right)?;
        if d.apply(&from.to_perm())? == to.to_perm() {
            ok += 1;
        }
    }
    Ok((ok, cases.len()))
}

/// Degree audit of `Γ̄`, the left-invariant variant, and `Cay` when in bounds.
pub fn regularity(n: usize, opts: &VerifyOptions) -> Result<Report> {
    require(n, 4)?;
    let mut r = Report::new();
    let g = build_bt_graph(n)?;
    let degrees = format_degrees(&g.degree_report());
    let want = if n == 4 { 3 } else { 2 * (n - 2) };
    let claim = if n == 4 {
        format!("n={n} bt graph is 3-regular")
    } else {
        format!("n={n} bt graph is 2(n-2)={want}-regular")
    };
    r.push(Check::with(
        claim,
        format!("{{{want}:{}}}", g.vertex_count()),
        &degrees,
        g.is_k_regular(want),
    ));
    let left = build_bt_graph_with(n, Convention::Left)?;
    r.push(Check::equal(
        format!("n={n} left-invariant bt graph has the same degrees"),
        &degrees,
        format_degrees(&left.degree_report()),
    ));
    if n <= opts.max_cayley_n {
        let cay = build_cayley(n, Convention::Left, opts.max_cayley_n)?;
        r.push(Check::equal(
            format!("n={n} Cay(Sym_n,T_n) is |T_n|-regular"),
            format!("{{{}:{}}}", tn_size(n), cay.vertex_count()),
            format_degrees(&cay.degree_report()),
        ));
        let right = build_cayley(n, Convention::Right, opts.max_cayley_n)?;
        let iso = cay.edges().all(|(u, v)| {
            let a = right.index_of(&cay.label(u).inverse()).expect("vertex");
            let b = right.index_of(&cay.label(v).inverse()).expect("vertex");
            right.has_edge(a, b)
        }) && cay.edge_count() == right.edge_count();
        r.push(Check::holds(
            format!("n={n} inversion maps left Cay onto right Cay"),
            iso,
        ));
    }
    Ok(r)
}

fn format_degrees(report: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = report.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    format!("{{{}}}", parts.join(","))
}

fn degree_set(degrees: &BTreeMap<usize, usize>, part: &[usize]) -> String {
    let set: BTreeSet<usize> = part.iter().map(|v| degrees[v]).collect();
    let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Cross-degrees between the classes, the clique on `B`, and the
/// composition identities behind them.
pub fn bipartite(n: usize) -> Result<Report> {
    require(n, 4)?;
    let g = build_bt_graph(n)?;
    let [b, l, f, s] = PartitionClass::ALL.map(|c| class_vertices(&g, c));
    let mut r = Report::new();
    let lf: Vec<usize> = l.iter().chain(&f).copied().collect();

    let d = g.bipartite_degrees(&lf, &b)?;
    r.push(Check::equal(format!("n={n} (L u F, B): degree on L u F"), "{1}", degree_set(&d, &lf)));
    r.push(Check::equal(
        format!("n={n} (L u F, B): degree on B is n-2"),
        format!("{{{}}}", n - 2),
        degree_set(&d, &b),
    ));
    let d = g.bipartite_degrees(&l, &f)?;
    let all_lf: Vec<usize> = l.iter().chain(&f).copied().collect();
    r.push(Check::equal(
        format!("n={n} (L, F) is (1,1)-biregular"),
        "{1}",
        degree_set(&d, &all_lf),
    ));
    let d = g.bipartite_degrees(&b, &s)?;
    let cross: usize = b.iter().map(|v| d[v]).sum();
    r.push(Check::equal(format!("n={n} edges between B and S"), 0, cross));

    r.push(Check::holds(format!("n={n} B induces a clique of size n-1"), g.is_clique(&b) && b.len() == n - 1));
    let extendable = (0..g.vertex_count())
        .filter(|v| !b.contains(v))
        .any(|v| b.iter().all(|&w| g.has_edge(v, w)));
    r.push(Check::holds(format!("n={n} the B clique is maximal"), !extendable));

    let (ok, total) = composition_identities(n);
    r.push(Check::equal(
        format!("n={n} block transposition product identities for B, L, F"),
        total,
        ok,
    ));
    Ok(r)
}

/// `σ(i,j,n) = σ(0,j,n) ∘ σ(0,n-j,n-j+i)` and its three companions, as
/// permutation equalities over every valid parameter. Returns
/// `(holding, total)`.
pub fn composition_identities(n: usize) -> (usize, usize) {
    let s = |i, j, k| cuts(n, i, j, k).to_perm();
    let mut results = Vec::new();
    for j in 2..n {
        for i in 1..j {
            results.push(s(i, j, n) == s(0, j, n).then_after(&s(0, n - j, n - j + i)));
            results.push(s(i, j, n) == s(0, i, j).then_after(&s(0, j - i, n)));
            results.push(s(0, j, n) == s(i, j, n).then_after(&s(0, i, n - j + i)));
        }
    }
    for j in 1..n {
        for i in 1..n - j {
            results.push(s(0, j, n) == s(0, j, j + i).then_after(&s(i, j + i, n)));
        }
    }
    (results.iter().filter(|&&x| x).count(), results.len())
}

/// Every pair of cut triples that share `(i,j)`, share `(j,k)`, chain as
/// `(i',j') = (j,k)` or `(j',k') = (i,j)`, or share `(i,k)`, is an edge of
/// `Γ̄`. Returns `(holding, total)`.
pub fn edge_witnesses(n: usize) -> Result<(usize, usize)> {
    let g = build_bt_graph(n)?;
    let tn = enumerate_tn(n)?;
    let (mut ok, mut total) = (0, 0);
    for a in &tn {
        let (i, j, k) = a.triple();
        for b in &tn {
            if a == b {
                continue;
            }
            let (i2, j2, k2) = b.triple();
            let case = (i2, j2) == (i, j)
                || ((i2, j2) == (j, k) && k < k2)
                || (j2, k2) == (j, k)
                || ((j2, k2) == (i, j) && i2 < i)
                || ((i, k) == (i2, k2) && j < j2);
            if case {
                total += 1;
                let (u, v) = (g.index_of(a).expect("vertex"), g.index_of(b).expect("vertex"));
                if g.has_edge(u, v) {
                    ok += 1;
                }
            }
        }
    }
    Ok((ok, total))
}

/// Maximal 2-cliques by the common-neighbour criterion, against the closed
/// forms `e_0, ..., e_n`.
pub fn cliques(n: usize) -> Result<Report> {
    require(n, 4)?;
    let g = build_bt_graph(n)?;
    let mut r = Report::new();
    let found: BTreeSet<(Cuts, Cuts)> = g
        .maximal_two_cliques()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (*g.label(u), *g.label(v));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let em = expected_em_edges(n)?;
    let expected: BTreeSet<(Cuts, Cuts)> = em.iter().map(|e| e.sorted_ends()).collect();
    r.push(Check::equal(format!("n={n} number of maximal 2-cliques is n+1"), n + 1, found.len()));
    r.push(Check::holds(
        format!("n={n} maximal 2-cliques equal the closed-form edges e_m"),
        found == expected,
    ));
    let endpoints: BTreeSet<Cuts> = em.iter().flat_map(|e| [e.ends.0, e.ends.1]).collect();
    if n >= 5 {
        r.push(Check::equal(
            format!("n={n} the edges e_m are pairwise disjoint"),
            2 * (n + 1),
            endpoints.len(),
        ));
    } else {
        r.push(Check::with(
            format!("n={n} distinct endpoints of the e_m (reported)"),
            "-",
            endpoints.len(),
            true,
        ));
    }
    let inverses = em[..=n - 3].iter().all(|e| e.ends.0.inverse() == e.ends.1);
    r.push(Check::holds(
        format!("n={n} endpoints of e_0..e_(n-3) are mutual inverses"),
        inverses,
    ));
    let f = Dihedral::rotation(n, Convention::Right);
    let mut cycle_ok = true;
    for e in &em {
        let target = &em[if e.m == 0 { n } else { e.m - 1 }];
        let img = (f.act_on_cuts(&e.ends.0)?, f.act_on_cuts(&e.ends.1)?);
        let img = if img.0 <= img.1 { img } else { (img.1, img.0) };
        cycle_ok &= img == target.sorted_ends();
    }
    r.push(Check::holds(
        format!("n={n} f-bar permutes the e_m as the cycle (e_n ... e_1 e_0)"),
        cycle_ok,
    ));
    let (ok, total) = edge_witnesses(n)?;
    r.push(Check::equal(format!("n={n} shared-cut pairs are edges"), total, ok));
    Ok(r)
}

/// `Γ̄(V)`: size, degrees and the explicit Hamiltonian cycle.
pub fn hamiltonian(n: usize) -> Result<Report> {
    require(n, 4)?;
    let mut r = Report::new();
    let gv = build_btv_graph(n)?;
    if n == 4 {
        r.push(Check::with(
            format!("n={n} |V| (reported)"),
            "-",
            gv.vertex_count(),
            true,
        ));
        r.push(Check::with(
            format!("n={n} graph on V is connected (reported)"),
            "-",
            gv.is_connected(),
            true,
        ));
        return Ok(r);
    }
    r.push(Check::equal(format!("n={n} |V| = 2(n+1)"), 2 * (n + 1), gv.vertex_count()));
    r.push(Check::equal(
        format!("n={n} graph on V is 3-regular"),
        format!("{{3:{}}}", 2 * (n + 1)),
        format_degrees(&gv.degree_report()),
    ));
    let cycle = hamiltonian_cycle_v(n)?;
    let indices: Option<Vec<usize>> = cycle.iter().map(|c| gv.index_of(c)).collect();
    let valid = indices.is_some_and(|ix| gv.is_hamiltonian_cycle(&ix));
    r.push(Check::holds(
        format!("n={n} constructed cycle is Hamiltonian on V"),
        valid,
    ));
    let g = build_bt_graph(n)?;
    let steps = cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .filter(|(a, b)| g.has_edge(g.index_of(a).unwrap(), g.index_of(b).unwrap()))
        .count();
    r.push(Check::equal(
        format!("n={n} consecutive cycle vertices adjacent in bt graph"),
        cycle.len(),
        steps,
    ));
    Ok(r)
}

/// The automorphism group of `Γ̄` and the rigidity at each vertex of `V`.
pub fn aut_bt(n: usize) -> Result<Report> {
    require(n, 4)?;
    let opts = AutOptions::default();
    let mut r = aut::check_theorem_aut_bt(n, opts)?;
    if n >= 5 {
        let g = build_bt_graph(n)?;
        let v = vertex_set_v(n)?;
        let mut trivial = 0;
        for c in &v {
            let idx = g.index_of(c).expect("V lies in T_n");
            if aut::stabilizer_fixing(&g, &[idx], opts)?.is_trivial() {
                trivial += 1;
            }
        }
        r.push(Check::equal(
            format!("n={n} vertices of V whose stabiliser in Aut is trivial"),
            v.len(),
            trivial,
        ));
    }
    Ok(r)
}

/// The right-invariant toric-reverse group acts regularly on `V`.
pub fn dihedral_regular_on_v(n: usize) -> Result<Report> {
    require(n, 5)?;
    let v = vertex_set_v(n)?;
    let set: BTreeSet<Cuts> = v.iter().copied().collect();
    let group = Dihedral::all(n, Convention::Right);
    let mut r = Report::new();
    r.push(Check::equal(format!("n={n} toric-reverse group order"), 2 * (n + 1), group.len()));
    let mut preserves = true;
    let mut orbit = BTreeSet::new();
    let mut stabiliser = 0;
    for d in &group {
        for c in &v {
            preserves &= set.contains(&d.act_on_cuts(c)?);
        }
        orbit.insert(d.act_on_cuts(&v[0])?);
        if d.act_on_cuts(&v[0])? == v[0] {
            stabiliser += 1;
        }
    }
    let free = group.iter().filter(|d| !d.is_identity()).all(|d| {
        v.iter().all(|c| d.act_on_cuts(c).map(|x| x != *c).unwrap_or(false))
    });
    r.push(Check::holds(format!("n={n} V is invariant"), preserves));
    r.push(Check::equal(format!("n={n} orbit of {} is all of V", v[0]), v.len(), orbit.len()));
    r.push(Check::equal(format!("n={n} stabiliser of {} in the group", v[0]), 1, stabiliser));
    r.push(Check::holds(format!("n={n} every point stabiliser is trivial"), free));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::SINGLE.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn identities_hold() {
        for n in 4..=8 {
            let (ok, total) = composition_identities(n);
            assert_eq!(ok, total, "n={n}");
            assert!(total > 0);
        }
        for n in 4..=7 {
            let (ok, total) = edge_witnesses(n).unwrap();
            assert_eq!(ok, total, "n={n}");
        }
        for n in 5..=8 {
            let (ok, total) = rotation_identities(n).unwrap();
            assert_eq!(ok, total, "n={n}");
        }
    }

    #[test]
    fn suites_pass_at_n6() {
        let opts = VerifyOptions::default();
        for s in Suite::SINGLE {
            let r = run(s, 6, &opts).unwrap();
            assert!(r.all_pass(), "{s}: {r}");
            assert!(!r.checks.is_empty());
        }
    }

    #[test]
    fn n4_regularity_is_reported_honestly() {
        let r = regularity(4, &VerifyOptions::default()).unwrap();
        let first = &r.checks[0];
        assert_eq!(first.expected, "{3:10}");
        assert_eq!(first.got, "{4:10}");
        assert!(!first.pass);
    }

    #[test]
    fn bounds_and_preconditions() {
        let opts = VerifyOptions::default();
        assert!(run(Suite::NTrivial, 7, &opts).is_err());
        assert!(run(Suite::Hamiltonian, 3, &opts).is_err());
        assert!(run(Suite::DihedralRegularOnV, 4, &opts).is_err());
        let all = run(Suite::All, 7, &opts).unwrap();
        assert!(all.checks.iter().all(|c| !c.claim.contains("u T_n")));
        let raised = opts.with_max_cayley_n(8);
        assert_eq!(raised.max_n_trivial, 8);
    }
}
