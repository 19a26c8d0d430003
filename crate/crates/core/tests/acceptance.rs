//! End-to-end acceptance criteria. Each criterion prints one `PASS`/`FAIL`
//! line (written straight to stdout, so it shows even when the test passes);
//! the test fails if any criterion does.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::panic;
use std::time::Instant;

use common::{as_element, opposite, random_gentle, random_strict, renamed, rng, Oracle};
use gentle::algebra::{assign_signs, rank_formula, verify_theta, TruncatedAlgebra};
use gentle::combinatorics::{
    admissible_decomposition, glue_split, injective_dimension, is_finite_projective, koszul_dual,
    same_presentation,
};
use gentle::fibres::{generic_fibre, special_fibre};
use gentle::lattices::{ar_quiver, canonicalize, is_mcm, syzygy, tau, LatticeLabel};
use gentle::report::{analyze, SignChoice};
use gentle::singularity::{dc_arrows, invariant, orbits, serre, shift_inverse};
use gentle::{samples, GentlePresentation, StrictPresentation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

/// Random admissible-complete presentations that are not all trivially small.
fn random_strict_sample(seed: u64, count: usize, max_vertices: usize) -> Vec<StrictPresentation> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let sp = random_strict(&mut r, max_vertices);
        if sp.quiver().arrow_count() >= 2 || out.len() % 5 == 0 {
            out.push(sp);
        }
    }
    out
}

fn prototype_reproduction() -> Outcome {
    let gp = samples::prototype();
    let q = gp.quiver();
    ensure!(
        (q.vertex_count(), q.arrow_count(), gp.relations().len()) == (7, 11, 8),
        "prototype has {} vertices, {} arrows, {} relations",
        q.vertex_count(),
        q.arrow_count(),
        gp.relations().len()
    );
    let lengths = sorted(admissible_decomposition(&gp).lengths());
    ensure!(lengths == [2, 9], "admissible cycle lengths {lengths:?}");

    let sp = samples::strict(gp.clone());
    let ar = ar_quiver(&sp);
    ensure!(
        ar.nodes.len() == 15,
        "AR quiver has {} nodes",
        ar.nodes.len()
    );
    let (finite, periodic) = (ar.finite_orbits(), ar.periodic_orbits());
    ensure!(
        (finite, periodic) == (3, 2),
        "{finite} finite and {periodic} periodic τ-orbits"
    );

    let inv = invariant(&gp);
    ensure!(inv == [3, 1], "singularity invariant {inv:?}");
    let a4 = gp.arrow("α(4)").unwrap();
    let a5 = gp.arrow("α(5)").unwrap();
    let shift_orbits = orbits(&gp);
    let orbit_of = |a| shift_orbits.iter().find(|o| o.contains(&a)).map(Vec::len);
    ensure!(
        orbit_of(a4) == Some(3),
        "orbit of L(α(4)) has length {:?}",
        orbit_of(a4)
    );
    ensure!(
        shift_inverse(&gp, a5).unwrap() == a5,
        "L(α(5)) is not shift-invariant"
    );
    Ok(format!(
        "cycles {lengths:?}, {} AR nodes, {finite}+{periodic} τ-orbits, invariant {inv:?}",
        ar.nodes.len()
    ))
}

fn koszul_duality() -> Outcome {
    let dual = koszul_dual(&samples::two_loops()).unwrap();
    let target = samples::two_loops_commuting();
    ensure!(
        same_presentation(&dual, &target) || same_presentation(&opposite(&dual), &target),
        "dual of two_loops is not the commuting presentation up to reversal"
    );
    let corpus = samples::corpus();
    for gp in &corpus {
        let twice = koszul_dual(&koszul_dual(gp).unwrap()).unwrap();
        ensure!(
            same_presentation(&twice, gp) && twice.quiver().name() == gp.quiver().name(),
            "double dual of {} differs",
            gp.quiver().name()
        );
    }
    Ok(format!(
        "two_loops! = two_loops_commuting; double dual identity on {} corpus quivers",
        corpus.len()
    ))
}

fn finite_projectivity() -> Outcome {
    let cb = samples::crawley_boevey();
    let verdict = is_finite_projective(&cb).unwrap();
    ensure!(!verdict.finite_projective, "crawley_boevey accepted");
    let witnesses = cb.names(&verdict.witnesses);
    ensure!(witnesses == ["y"], "crawley_boevey witnesses {witnesses:?}");
    for gp in [samples::prototype(), samples::two_cycle()] {
        ensure!(
            is_finite_projective(&gp).unwrap().finite_projective,
            "{} rejected",
            gp.quiver().name()
        );
    }

    let mut r = rng(2024);
    let (mut accepted, mut rejected) = (0, 0);
    for i in 0..200 {
        let gp = random_gentle(&mut r, 6);
        let by_cover = admissible_decomposition(&gp).covers_all();
        let by_glue = glue_split(&gp).all_cyclic();
        ensure!(
            by_cover == by_glue,
            "criteria disagree on random presentation #{i}"
        );
        if by_cover {
            accepted += 1;
        } else {
            rejected += 1;
        }
    }
    ensure!(
        accepted > 0 && rejected > 0,
        "random sample is one-sided ({accepted}/{rejected})"
    );
    Ok(format!(
        "witness y; criteria agree on 200 random presentations ({accepted} accepted, {rejected} rejected)"
    ))
}

fn dualising_bimodule() -> Outcome {
    const N: usize = 4;
    let mut presentations: Vec<StrictPresentation> = [
        samples::prototype(),
        samples::two_cycle(),
        samples::two_loops(),
    ]
    .into_iter()
    .map(samples::strict)
    .collect();
    presentations.extend(random_strict_sample(404, 25, 6));
    let mut checks = 0;
    for sp in presentations.iter() {
        let report = verify_theta(sp.clone(), assign_signs(sp), N).unwrap();
        ensure!(
            report.passed(),
            "{} failures on {}, first: {:?}",
            report.failures.len(),
            sp.quiver().name(),
            report.failures.first()
        );
        checks += report.total_checks();
    }
    Ok(format!(
        "{} presentations (3 named + 25 random) modulo c^{N}: {checks} checks, 0 failures",
        presentations.len()
    ))
}

fn algebra_oracle() -> Outcome {
    const MAX_BASIS: usize = 40;
    let mut presentations: Vec<StrictPresentation> = samples::strict_corpus()
        .into_iter()
        .filter(|sp| rank_formula(sp) <= MAX_BASIS)
        .collect();
    let mut r = rng(505);
    while presentations.len() < 20 {
        let sp = random_strict(&mut r, 6);
        if (8..=MAX_BASIS).contains(&rank_formula(&sp)) {
            presentations.push(sp);
        }
    }

    let (mut triples, mut products) = (0usize, 0usize);
    for sp in &presentations {
        let name = sp.quiver().name().to_string();
        let eps = assign_signs(sp);
        let alg = TruncatedAlgebra::new(sp.clone(), eps.clone(), 4).unwrap();
        let oracle = Oracle::new(sp, &eps);

        let cycle_sum: usize = sp.arrow_ids().map(|a| oracle.cycle_length(a) - 1).sum();
        let positive = sp.arrow_ids().filter(|&a| eps.is_positive(a)).count();
        let expected_rank = sp.quiver().vertex_count() + cycle_sum + positive;
        ensure!(
            alg.rank() == expected_rank,
            "{name}: rank {} ≠ {expected_rank}",
            alg.rank()
        );
        ensure!(
            alg.rank() == oracle.rank_by_enumeration(),
            "{name}: rank differs from path enumeration"
        );

        let basis: Vec<_> = (0..alg.rank()).map(|i| alg.basis_element_at(i)).collect();
        let c = alg.c();
        for (i, a) in basis.iter().enumerate() {
            ensure!(
                alg.multiply(&c, a).unwrap() == alg.multiply(a, &c).unwrap(),
                "{name}: c does not commute with {}",
                alg.item_label(alg.basis()[i])
            );
            for (j, b) in basis.iter().enumerate() {
                let ab = alg.multiply(a, b).unwrap();
                let expected = as_element(&alg, &oracle.product(alg.basis()[i], alg.basis()[j]));
                ensure!(
                    ab == expected,
                    "{name}: {} · {} disagrees with the oracle",
                    alg.item_label(alg.basis()[i]),
                    alg.item_label(alg.basis()[j])
                );
                products += 1;
                for d in &basis {
                    let left = alg.multiply(&ab, d).unwrap();
                    let right = alg.multiply(a, &alg.multiply(b, d).unwrap()).unwrap();
                    ensure!(left == right, "{name}: associativity fails");
                    triples += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} presentations with |B| ≤ {MAX_BASIS}: {triples} triples, {products} oracle products",
        presentations.len()
    ))
}

fn ar_syzygy_consistency() -> Outcome {
    let mut strict: Vec<StrictPresentation> = samples::strict_corpus();
    let strict_corpus = strict.len();
    strict.extend(random_strict_sample(606, 30, 6));
    let mut labels = 0;
    for sp in &strict {
        let name = sp.quiver().name().to_string();
        let ar = ar_quiver(sp);
        for a in sp.arrow_ids() {
            let l = canonicalize(sp, LatticeLabel::ArrowIdeal(a));
            if l.is_projective() {
                continue;
            }
            ensure!(
                tau(sp, l) == syzygy(sp, a) && ar.tau_of(l) == tau(sp, l),
                "{name}: τ and Ω differ on {}",
                l.name(sp)
            );
            labels += 1;
        }
        let mcm: BTreeSet<_> = sp.arrow_ids().filter(|&a| is_mcm(sp, a)).collect();
        let dc: BTreeSet<_> = dc_arrows(sp).into_iter().collect();
        ensure!(mcm == dc, "{name}: MCM arrows ≠ differential-cycle arrows");
    }

    let mut gentle: Vec<GentlePresentation> = samples::corpus();
    let corpus = gentle.len();
    let mut r = rng(607);
    gentle.extend((0..30).map(|_| random_gentle(&mut r, 6)));
    for gp in &gentle {
        let name = gp.quiver().name().to_string();
        let dc: BTreeSet<_> = dc_arrows(gp).into_iter().collect();
        let images: BTreeSet<_> = dc.iter().map(|&a| shift_inverse(gp, a).unwrap()).collect();
        ensure!(
            images == dc,
            "{name}: ρ does not permute the differential-cycle arrows"
        );
        for &a in &dc {
            ensure!(
                serre(gp, a).unwrap() == a,
                "{name}: Serre functor moves {}",
                gp.arrow_name(a)
            );
        }
    }
    Ok(format!(
        "τ = Ω on {labels} lattices and MCM = dc over {strict_corpus} strict corpus + 30 random; \
         ρ bijective and Serre = id over {corpus} corpus + 30 random"
    ))
}

fn injective_dimension_values() -> Outcome {
    let expected = [
        (samples::two_cycle_radical_square(), 0),
        (samples::two_loops(), 1),
        (samples::prototype(), 3),
    ];
    let mut r = rng(707);
    for (gp, w) in &expected {
        let got = injective_dimension(gp);
        ensure!(got == *w, "w({}) = {got}, expected {w}", gp.quiver().name());
    }
    let mut checked = 0;
    let mut all: Vec<GentlePresentation> = samples::corpus();
    all.extend((0..50).map(|_| random_gentle(&mut r, 6)));
    for gp in &all {
        for _ in 0..3 {
            let other = renamed(gp, &mut r);
            ensure!(
                injective_dimension(&other) == injective_dimension(gp),
                "w changes under renaming of {}",
                gp.quiver().name()
            );
            checked += 1;
        }
    }
    Ok(format!(
        "w = 0, 1, 3; invariant under {checked} random renamings"
    ))
}

fn fibre_types() -> Outcome {
    let proto = generic_fibre(&samples::prototype());
    ensure!(proto == [9, 2], "prototype generic fibre {proto:?}");
    let two_cycle = samples::two_cycle();
    let generic = generic_fibre(&two_cycle);
    ensure!(generic == [2], "two-cycle generic fibre {generic:?}");
    let special = special_fibre(&two_cycle).unwrap();
    let relations: BTreeSet<String> = special
        .relations
        .iter()
        .map(|r| r.display(&two_cycle))
        .collect();
    let want: BTreeSet<String> = ["β·α = 0", "α·β = 0"].map(String::from).into();
    ensure!(
        relations == want,
        "two-cycle special fibre relations {relations:?}"
    );
    ensure!(
        special.dimension == 4,
        "special fibre dimension {}",
        special.dimension
    );
    Ok("Mat9 × Mat2; Mat2; special fibre αβ = βα = 0 of dimension 4".into())
}

fn sign_independence() -> Outcome {
    let mut presentations: Vec<StrictPresentation> = samples::strict_corpus();
    let named = presentations.len();
    presentations.extend(random_strict_sample(909, 20, 5));
    let mut genuinely_flipped = 0;
    for sp in &presentations {
        let name = sp.quiver().name().to_string();
        let order = if sp.quiver().arrow_count() > 8 { 3 } else { 4 };
        let mut a = analyze(sp, Some(order), SignChoice::Declaration).unwrap();
        let mut b = analyze(sp, Some(order), SignChoice::Flipped).unwrap();
        for r in [&a, &b] {
            let v = r.omega_verify.as_ref().unwrap();
            ensure!(
                v.passed,
                "{name}: theta fails under {:?} signs",
                r.algebra.as_ref().unwrap().signs
            );
        }
        let (sa, sb) = (a.algebra.take().unwrap(), b.algebra.take().unwrap());
        if sa.positive_arrows != sb.positive_arrows {
            genuinely_flipped += 1;
        }
        ensure!(
            (sa.rank, &sa.cartan) == (sb.rank, &sb.cartan),
            "{name}: algebra rank or Cartan matrix depends on the signs"
        );
        ensure!(a == b, "{name}: report changes with the sign assignment");
    }
    ensure!(
        genuinely_flipped > 0,
        "no presentation had a two-regular vertex"
    );
    Ok(format!(
        "identical reports under both sign choices on {} presentations ({named} corpus + 20 random; {genuinely_flipped} with distinct signs)",
        presentations.len()
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("prototype reproduction", prototype_reproduction),
        ("Koszul duality", koszul_duality),
        ("finite projectivity", finite_projectivity),
        ("dualising bimodule", dualising_bimodule),
        ("algebra arithmetic oracle", algebra_oracle),
        ("AR/syzygy consistency", ar_syzygy_consistency),
        ("injective dimension", injective_dimension_values),
        ("fibre types", fibre_types),
        ("sign independence", sign_independence),
    ];
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        let (status, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        writeln!(out, "{status} {} {name} ({secs:.2}s): {detail}", i + 1).unwrap();
        if result.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
