//! Acceptance suite: nine exact checks over the bundled corpus, one
//! pass/fail line each. Runs without the libtest harness so the lines are
//! always visible.

mod common;

use std::time::{Duration, Instant};

use common::{int, q, random_poly, rng};
use foliation_cli::corpus::{Corpus, Entry};
use foliation_core::oracle::decompose_over;
use foliation_core::planar::{substitution_identity_holds, FailureKind};
use foliation_core::{
    check_conditions, cofactor, decompose, free_basis, is_weakly_tame, jacobian_lift, nd_basis, nd_decompose,
    quasi_weights, saito_det, solve_truncated, span_certify, trivial_generators, BasisKind, FreeBasis,
    GroebnerBasis, ModuleBasis, MonomialOrder, Poly, QuotientDimension, Rational, VectorField, Weights,
    ZeroCofactorFamily,
};

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Option<Duration>, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn xy() -> (Poly, Poly) {
    (Poly::var(2, 0), Poly::var(2, 1))
}

fn field(components: Vec<Poly>) -> VectorField<Rational> {
    VectorField::new(components).unwrap()
}

fn basis_of(f: &Poly) -> Result<ModuleBasis<Rational>, String> {
    match free_basis(f).map_err(|e| e.to_string())? {
        FreeBasis::Basis(b) => Ok(b),
        FreeBasis::Failure(fail) => Err(format!("no free basis: {:?}", fail.kind)),
    }
}

/// Free basis for any corpus entry, planar or not.
fn entry_basis(e: &Entry) -> Option<ModuleBasis<Rational>> {
    let f = e.polynomial().unwrap();
    if e.is_planar() {
        match free_basis(&f).unwrap() {
            FreeBasis::Basis(b) => Some(b),
            FreeBasis::Failure(_) => None,
        }
    } else {
        let family = ZeroCofactorFamily::new(f, e.family().unwrap()).unwrap();
        let xs = check_conditions(&family).unwrap().x_star?;
        Some(nd_basis(&family, xs).unwrap())
    }
}

fn cusp() -> Check {
    let (x, y) = xy();
    let f = &x.pow(2) + &y.pow(3);
    let (tame, milnor) = is_weakly_tame(&f).map_err(|e| e.to_string())?;
    ensure!(tame && milnor.value() == Some(2), "milnor space {milnor:?}");
    let w = quasi_weights(&f).unwrap();
    ensure!(w == Some(Weights { l: 3, m: 2, d: 6 }), "weights {w:?}");
    let lift = jacobian_lift(&f).unwrap().ok_or("not a Jacobian member")?;
    let expect = field(vec![&x * &q(2, 1, 2), &y * &q(2, 1, 3)]);
    ensure!(lift == expect, "lift {lift:?}");
    let k = cofactor(&f, &lift).unwrap().ok_or("lift not invariant")?;
    ensure!(k.value() == &int(2, 1), "lift cofactor {:?}", k.value());

    let b = basis_of(&f)?;
    ensure!(b.kind == BasisKind::Theorem1, "kind {:?}", b.kind);
    let det = saito_det(&b.fields[0], &b.fields[1]).unwrap();
    ensure!((&det + &f).is_zero(), "saito_det {det:?}");

    let t = trivial_generators(&f).unwrap();
    let d1 = decompose(&b, &t.x1).map_err(|e| e.to_string())?;
    ensure!(
        d1.coefficients == vec![&y * &q(2, -1, 3), &x * &int(2, 2)],
        "decompose(X1) = {:?}",
        d1.coefficients
    );
    for g in [&t.x1, &t.x2] {
        let d = decompose(&b, g).map_err(|e| e.to_string())?;
        ensure!(&b.recombine(&d.coefficients) == g, "recombination mismatch");
    }
    Ok(())
}

fn double_line() -> Check {
    let (x, y) = xy();
    let f = &x.pow(2) * &y;
    let b = basis_of(&f)?;
    ensure!(b.kind == BasisKind::Theorem3, "kind {:?}", b.kind);
    ensure!(b.divisor == x, "divisor {:?}", b.divisor);
    let g0 = field(vec![-x.clone(), &y * &int(2, 2)]);
    let gs = field(vec![&x * &q(2, 1, 2), Poly::zero(2)]);
    ensure!(b.fields == vec![g0, gs], "basis {:?}", b.fields);
    let det = saito_det(&b.fields[0], &b.fields[1]).unwrap();
    ensure!(det == -(&x * &y), "saito_det {det:?}");
    Ok(())
}

fn oracle_concordance(corpus: &Corpus) -> Check {
    let mut certified = 0;
    let mut controls = 0;
    for e in &corpus.entry {
        let Some(b) = entry_basis(e) else { continue };
        let space = solve_truncated(&b.f, 6).unwrap();
        ensure!(space.is_sound(), "{}: unsound oracle output", e.name);
        let rep = span_certify(&b, &space).unwrap();
        ensure!(rep.all_ok(), "{}: {} elements not in span", e.name, rep.failures().count());
        certified += rep.entries.len();

        // for x + y^2 the field f*d/dx already is X*, so the swap is no
        // corruption there
        let x1 = if e.is_planar() { Some(trivial_generators(&b.f).unwrap().x1) } else { None };
        if let Some(x1) = x1.filter(|x1| x1 != &b.fields[1]) {
            let mut bad = b.clone();
            bad.fields[1] = x1;
            let neg = span_certify(&bad, &space).unwrap();
            ensure!(neg.failures().count() >= 1, "{}: corrupted basis passed", e.name);
            controls += 1;
        }
    }
    ensure!(certified > 0 && controls > 0, "nothing certified");
    Ok(())
}

fn round_trip(corpus: &Corpus) -> Check {
    let mut r = rng(4);
    for e in &corpus.entry {
        let Some(b) = entry_basis(e) else { continue };
        if b.kind == BasisKind::NDim {
            continue;
        }
        for _ in 0..50 {
            let a = random_poly(&mut r, 2, 3);
            let c = random_poly(&mut r, 2, 3);
            let x = b.recombine(&[a.clone(), c.clone()]);
            let d = decompose_over(&b, &x).map_err(|err| format!("{}: {err}", e.name))?;
            ensure!(d == vec![a.clone(), c.clone()], "{}: decomposition differs", e.name);
            let k = cofactor(&b.f, &x).unwrap().ok_or("combination not invariant")?;
            ensure!(k.value() == &d[1], "{}: R* differs from cofactor", e.name);
        }
    }
    Ok(())
}

fn trivial_cofactors(corpus: &Corpus) -> Check {
    let mut r = rng(5);
    for e in corpus.entry.iter().filter(|e| e.is_planar()) {
        let f = e.polynomial().unwrap();
        let fx = f.partial_derivative(0).unwrap();
        let fy = f.partial_derivative(1).unwrap();
        let t = trivial_generators(&f).unwrap();
        let expect = [Poly::zero(2), fx.clone(), fy.clone()];
        for (g, k) in [&t.hamiltonian, &t.x1, &t.x2].into_iter().zip(&expect) {
            let got = cofactor(&f, g).unwrap().ok_or("trivial generator not invariant")?;
            ensure!(got.value() == k, "{}: cofactor {:?}", e.name, got.value());
        }
        for _ in 0..20 {
            let a = random_poly(&mut r, 2, 3);
            let c = random_poly(&mut r, 2, 3);
            let x = t.x1.times(&a).add(&t.x2.times(&c));
            let got = cofactor(&f, &x).unwrap().ok_or("combination not invariant")?;
            ensure!(got.value() == &(&(&a * &fx) + &(&c * &fy)), "{}: cofactor ideal", e.name);
        }
    }
    Ok(())
}

fn euler_law(corpus: &Corpus) -> Check {
    let (x, y) = xy();
    let mut seen = 0;
    for e in corpus.entry.iter().filter(|e| e.is_planar()) {
        let f = e.polynomial().unwrap();
        let computed = quasi_weights(&f).unwrap();
        let Some([l, m, d]) = e.weights else {
            ensure!(computed.is_none(), "{}: unexpected weights {computed:?}", e.name);
            continue;
        };
        let w = Weights { l, m, d };
        ensure!(computed == Some(w), "{}: weights {computed:?}", e.name);
        let euler = field(vec![&x * &int(2, l as i64), &y * &int(2, m as i64)]);
        let k = cofactor(&f, &euler).unwrap().ok_or("Euler field not invariant")?;
        ensure!(k.value() == &int(2, d as i64), "{}: Euler cofactor {:?}", e.name, k.value());
        ensure!(substitution_identity_holds(&f, &w), "{}: substitution identity", e.name);
        seen += 1;
    }
    ensure!(seen > 0, "no weighted entries");
    Ok(())
}

fn three_dimensional() -> Check {
    let x = Poly::var(3, 0);
    let y = Poly::var(3, 1);
    let z = Poly::var(3, 2);
    let zero = Poly::zero(3);
    let f = &(&x + &y.pow(2)) + &z.pow(3);
    let fields = vec![
        VectorField::new(vec![&y * &int(3, -2), int(3, 1), zero.clone()]).unwrap(),
        VectorField::new(vec![&z.pow(2) * &int(3, -3), zero.clone(), int(3, 1)]).unwrap(),
    ];
    let family = ZeroCofactorFamily::new(f.clone(), fields).map_err(|e| e.to_string())?;
    let rep = check_conditions(&family).unwrap();
    ensure!(rep.condition1 && rep.condition2 && rep.condition3, "conditions {rep:?}");
    let xs = VectorField::new(vec![f.clone(), zero.clone(), zero]).unwrap();
    ensure!(rep.x_star.as_ref() == Some(&xs), "x_star {:?}", rep.x_star);
    ensure!(family.gradient_parallel_to_minors(), "gradient not parallel to minors");

    let mut r = rng(7);
    let b = nd_basis(&family, xs.clone()).unwrap();
    for _ in 0..20 {
        let coeffs: Vec<Poly> = (0..3).map(|_| random_poly(&mut r, 3, 2)).collect();
        let x = b.recombine(&coeffs);
        let d = nd_decompose(&family, &xs, &x).map_err(|e| e.to_string())?;
        ensure!(d.coefficients == coeffs, "combination not recovered");
    }
    Ok(())
}

fn groebner_self_checks(corpus: &Corpus) -> Check {
    let mut r = rng(8);
    for e in &corpus.entry {
        let f = e.polynomial().unwrap();
        let n = f.nvars();
        let jac = f.gradient();
        let grevlex = GroebnerBasis::new(&jac, MonomialOrder::Grevlex).unwrap();
        let lex = GroebnerBasis::new(&jac, MonomialOrder::Lex).unwrap();
        for gb in [&grevlex, &lex] {
            ensure!(gb.satisfies_buchberger_criterion(), "{}: S-pair does not reduce", e.name);
            ensure!(gb.is_reduced() && gb.lifts_are_exact(), "{}: basis not reduced/exact", e.name);
        }
        let mut samples = vec![f.clone()];
        for _ in 0..5 {
            let combo = jac.iter().fold(Poly::zero(n), |acc, g| &acc + &(g * &random_poly(&mut r, n, 2)));
            samples.push(combo);
            samples.push(random_poly(&mut r, n, 3));
        }
        for s in &samples {
            let a = grevlex.lift(s).unwrap();
            let b = lex.lift(s).unwrap();
            ensure!(a.is_some() == b.is_some(), "{}: lex and grevlex disagree", e.name);
            for lift in [a, b].into_iter().flatten() {
                let back = lift.iter().zip(&jac).fold(Poly::zero(n), |acc, (c, g)| &acc + &(c * g));
                ensure!(&back == s, "{}: lift residual nonzero", e.name);
            }
        }
    }
    Ok(())
}

fn negative_battery(corpus: &Corpus) -> Check {
    let (x, y) = xy();
    let (tame, milnor) = is_weakly_tame(&x.pow(2)).unwrap();
    ensure!(!tame && milnor == QuotientDimension::Infinite, "x^2 reported weakly tame");
    let g = &(&x.pow(2) + &y.pow(3)) + &y.pow(2);
    ensure!(quasi_weights(&g).unwrap().is_none(), "x^2 + y^3 + y^2 reported quasi-homogeneous");

    let e = corpus.get("non-member").ok_or("corpus lacks the non-member entry")?;
    let f = e.polynomial().unwrap();
    ensure!(jacobian_lift(&f).unwrap().is_none(), "non-member has a Jacobian lift");
    match free_basis(&f).unwrap() {
        FreeBasis::Failure(fail) if fail.kind == FailureKind::NotInJacobianIdeal => Ok(()),
        other => Err(format!("free_basis returned {other:?}")),
    }
}

fn main() {
    let corpus = Corpus::bundled();
    let criteria: Vec<Criterion> = vec![
        ("cusp end-to-end", Some(Duration::from_secs(1)), Box::new(cusp)),
        ("double line x^2*y", Some(Duration::from_secs(1)), Box::new(double_line)),
        ("oracle concordance", Some(Duration::from_secs(60)), Box::new(|| oracle_concordance(&corpus))),
        ("round-trip freeness", Some(Duration::from_secs(30)), Box::new(|| round_trip(&corpus))),
        ("trivial cofactors", None, Box::new(|| trivial_cofactors(&corpus))),
        ("Euler law", None, Box::new(|| euler_law(&corpus))),
        ("three variables", Some(Duration::from_secs(5)), Box::new(three_dimensional)),
        ("Groebner self-checks", None, Box::new(|| groebner_self_checks(&corpus))),
        ("negative battery", None, Box::new(|| negative_battery(&corpus))),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, limit) {
            if elapsed > *limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
