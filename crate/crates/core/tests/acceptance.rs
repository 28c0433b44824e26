//! Acceptance gate. Runs every criterion, prints one line per criterion and
//! exits nonzero if any of them fails. All comparisons are exact.

use std::process::ExitCode;
use std::time::Instant;

use hecke_core::arith::{frac, int, Q};
use hecke_core::partitions::{
    count_mixed_matrices, enumerate, enumerate_pairs, kostka, lr_coeff, lr_coeff_pieri, standard_tableaux_count,
};
use hecke_core::rmatrix::{self, build_standard, build_super, load_and_validate, HeckeSymmetry};
use hecke_core::series::{self, BirankCertificate, Poly, TruncSeries};
use hecke_core::symfunc::{self, elem, Basis, SymElement};
use hecke_core::verify;
use hecke_core::Error;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(1 - t)^r` from binomial coefficients.
fn one_minus_t_pow(r: usize) -> Poly {
    let r = r as i64;
    Poly::from_ints(&(0..=r).map(|k| binom(r, k) * if k % 2 == 0 { 1 } else { -1 }).collect::<Vec<_>>())
}

fn e(x: impl std::fmt::Display) -> String {
    x.to_string()
}

fn criterion_1() -> Outcome {
    let n_max = 5;
    let mut runs = 0;
    for r in 1..=3usize {
        for q in [int(1), int(2), int(-1)] {
            let sym = build_standard(r, q.clone()).map_err(e)?;
            let data = verify::hilbert_data(&sym, n_max).map_err(e)?;
            for n in 0..=n_max {
                let want_s = binom((n + r - 1) as i64, r as i64 - 1) as usize;
                let want_l = binom(r as i64, n as i64) as usize;
                ensure(data.symmetric[n] == want_s, || {
                    format!("std({r},{q}) dim S_{n} = {} expected {want_s}", data.symmetric[n])
                })?;
                ensure(data.exterior[n] == want_l, || {
                    format!("std({r},{q}) dim Λ_{n} = {} expected {want_l}", data.exterior[n])
                })?;
            }
            let cert = data.certificate.clone().map_err(|m| format!("std({r},{q}): {m}"))?;
            ensure(cert.f0 == one_minus_t_pow(r) && cert.f1 == Poly::one(), || {
                format!("std({r},{q}) certificate f0={} f1={}", cert.f0, cert.f1)
            })?;
            let rep = verify::suite_hilbert(&sym, n_max).map_err(e)?;
            ensure(rep.passed(), || rep.render_table())?;
            runs += 1;
        }
    }
    Ok(format!("{runs} symmetries, n <= {n_max}"))
}

fn criterion_2() -> Outcome {
    for q in [int(1), int(2)] {
        let sym = build_super(1, 1, q.clone()).map_err(e)?;
        let data = verify::hilbert_data(&sym, 5).map_err(e)?;
        ensure(data.symmetric == vec![1, 2, 2, 2, 2, 2], || format!("q={q}: dims {:?}", data.symmetric))?;
        let cert = data.certificate.map_err(|m| format!("q={q}: {m}"))?;
        ensure((cert.r0, cert.r1) == (1, 1), || format!("q={q}: birank ({}, {})", cert.r0, cert.r1))?;
    }
    Ok("dims 1,2,2,2,2,2 and birank (1,1) for q = 1, 2".into())
}

fn homspace_pairs() -> Result<Vec<(HeckeSymmetry, HeckeSymmetry)>, String> {
    let q = int(2);
    let std2 = build_standard(2, q.clone()).map_err(e)?;
    let std1 = build_standard(1, q.clone()).map_err(e)?;
    let sup = build_super(1, 1, q).map_err(e)?;
    Ok(vec![(std2.clone(), std2.clone()), (std2, std1.clone()), (std1, sup)])
}

fn certificate_of(sym: &HeckeSymmetry) -> Result<BirankCertificate, String> {
    verify::hilbert_data(sym, 4).map_err(e)?.certificate
}

fn criterion_3() -> Outcome {
    let mut summary = Vec::new();
    for (r2, r) in homspace_pairs()? {
        let (c, c2) = (certificate_of(&r)?, certificate_of(&r2)?);
        let by_diamond = series::diamond(&c.symmetric_series(4).map_err(e)?, &c2.symmetric_series(4).map_err(e)?, 4)
            .map_err(e)?;
        let closed = series::closed_form_a_series(&c, &c2, 4)
            .map_err(e)?
            .ok_or("roots expected to be rational")?;
        let mut dims = Vec::new();
        for n in 0..=4 {
            let a = Q::from_integer(rmatrix::dim_intertwiner(&r2, &r, n).map_err(e)?.into());
            ensure(a == by_diamond.coeff(n) && a == closed.coeff(n), || {
                format!("{r2}/{r} n={n}: nullity {a}, ⋄ {}, product {}", by_diamond.coeff(n), closed.coeff(n))
            })?;
            dims.push(a.to_string());
        }
        summary.push(format!("[{}]", dims.join(",")));
    }
    let std2 = build_standard(2, int(2)).map_err(e)?;
    for (n, want) in [(2, 10), (3, 20)] {
        let got = rmatrix::dim_intertwiner(&std2, &std2, n).map_err(e)?;
        ensure(got == want, || format!("dim A_{n}(std2,std2) = {got}, expected {want}"))?;
    }
    Ok(format!("A dims {}", summary.join(" ")))
}

fn criterion_4() -> Outcome {
    let mut summary = Vec::new();
    for (idx, (r2, r)) in homspace_pairs()?.into_iter().enumerate() {
        let a = series::predict_a_series(&certificate_of(&r)?, &certificate_of(&r2)?, 4).map_err(e)?;
        let es = series::e_series_from_a(&a).map_err(e)?;
        let mut dims = Vec::new();
        for n in 0..=4 {
            let got = rmatrix::dim_e_component(&r2, &r, n).map_err(e)?;
            ensure(Q::from_integer(got.into()) == es.coeff(n), || {
                format!("{r2}/{r} n={n}: E dim {got}, predicted {}", es.coeff(n))
            })?;
            if idx == 0 {
                let want = binom(4, n as i64) as usize;
                ensure(got == want, || format!("std2/std2 E_{n} = {got}, expected {want}"))?;
            }
            dims.push(got.to_string());
        }
        summary.push(format!("[{}]", dims.join(",")));
    }
    Ok(format!("E dims {}", summary.join(" ")))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for sym in [
        build_standard(2, int(2)).map_err(e)?,
        build_super(1, 1, int(1)).map_err(e)?,
    ] {
        let rep = verify::suite_character(&sym, 4).map_err(e)?;
        ensure(rep.passed(), || rep.render_table())?;
        count += rep.checks.len();
        let cert = certificate_of(&sym)?;
        let d = sym.d() as i64;
        for n in 0..=5u32 {
            let sum = verify::tensor_dimension_sum(&cert, n as usize).map_err(e)?;
            ensure(sum == int(d.pow(n)), || format!("{sym} n={n}: Σ = {sum}, d^n = {}", d.pow(n)))?;
        }
    }
    Ok(format!("{count} quotient and identity checks"))
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    let deg = rng.gen_range(0..=3);
    let mut c = vec![Q::one()];
    for _ in 0..deg {
        c.push(frac(rng.gen_range(-9..=9), rng.gen_range(1..=5)));
    }
    Poly::new(c)
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut done = 0;
    let mut tried = 0;
    while done < 200 {
        tried += 1;
        let (p, q) = (random_poly(&mut rng), random_poly(&mut rng));
        if p.gcd(&q) != Poly::one() {
            continue;
        }
        let f = TruncSeries::from_ratio(&p, &q, 2 * 3 + 4).map_err(e)?;
        let found = series::detect_rational(&f, 3).ok_or_else(|| format!("not detected: p={p}, q={q}"))?;
        ensure(found.num == p && found.den == q, || {
            format!("p={p}, q={q} recovered as {}", found)
        })?;
        done += 1;
    }
    Ok(format!("200/200 recovered ({tried} draws)"))
}

fn criterion_7() -> Outcome {
    for (r0, r1) in [(2, 0), (1, 1), (0, 2), (2, 1)] {
        let cert = BirankCertificate::from_polys(one_minus_t_pow(r0), one_minus_t_pow(r1)).map_err(e)?;
        let rep = verify::suite_positivity(&cert, 8).map_err(e)?;
        ensure(rep.passed(), || rep.render_table())?;
    }
    Ok("support equals Γ(r0,r1) and values nonnegative for |λ| <= 8".into())
}

fn criterion_8() -> Outcome {
    for n in 1..=7usize {
        let mut total = SymElement::zero(n, Basis::H);
        for i in 0..=n {
            let h = if i == 0 { SymElement::one(Basis::H) } else { elem(Basis::H, &[i]) };
            let en = if n == i { SymElement::one(Basis::E) } else { elem(Basis::E, &[n - i]) };
            let term = symfunc::multiply(&h, &en).map_err(e)?;
            let sign = if i % 2 == 0 { Q::one() } else { -Q::one() };
            total = total.add(&term.scale(&sign)).map_err(e)?;
        }
        ensure(total.is_zero(), || format!("Σ(-1)^i h_i e_(n-i) = {total} at n={n}"))?;

        let h1n = elem(Basis::H, &vec![1; n]);
        let expected = SymElement::from_terms(
            n,
            Basis::S,
            enumerate(n, None).into_iter().map(|rho| {
                let d = Q::from_integer(standard_tableaux_count(&rho).into());
                (rho, d)
            }),
        )
        .map_err(e)?;
        ensure(symfunc::to_basis(&h1n, Basis::S).map_err(e)? == expected, || format!("h_1^{n} expansion"))?;

        let parts = enumerate(n, None);
        for l in &parts {
            for m in &parts {
                let k = kostka(l, m).map_err(e)?;
                if l == m {
                    ensure(k == 1u32.into(), || format!("K_{l}{l} = {k}"))?;
                } else if !k.is_zero() {
                    ensure(m.dominance_leq(l).map_err(e)?, || format!("K_{l}{m} = {k} without dominance"))?;
                }
            }
        }
    }
    for w in 0..=7usize {
        for k in 0..=w {
            for l in enumerate(k, None) {
                for m in enumerate(w - k, None) {
                    for nu in enumerate(w, None) {
                        let a = lr_coeff(&l, &m, &nu);
                        let b = lr_coeff_pieri(&l, &m, &nu);
                        ensure(a == (b as u64).into() && b >= 0, || format!("c^{nu}_{l},{m}: {a} vs {b}"))?;
                    }
                }
            }
        }
    }
    for w in 0..=6usize {
        for pair in enumerate_pairs(w) {
            let prod = symfunc::multiply(
                &SymElement::basis_element(Basis::H, pair.first.clone()),
                &SymElement::basis_element(Basis::E, pair.second.clone()),
            )
            .map_err(e)?;
            for nu in enumerate(w, None) {
                let ip = symfunc::inner_product(&prod, &SymElement::basis_element(Basis::H, nu.clone())).map_err(e)?;
                let n = Q::from_integer(count_mixed_matrices(&pair, &nu).map_err(e)?.into());
                ensure(ip == n, || format!("⟨h e, h_{nu}⟩ = {ip} vs {n} for {pair}"))?;
            }
        }
    }
    Ok("identities exact through weight 7 (pairing through 6)".into())
}

fn random_series(rng: &mut ChaCha8Rng, order: usize) -> TruncSeries {
    let mut c = vec![Q::one()];
    for _ in 0..order {
        c.push(frac(rng.gen_range(-6..=6), rng.gen_range(1..=4)));
    }
    TruncSeries::new(c).expect("nonempty")
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let order = 6;
    for trial in 0..50 {
        let f = random_series(&mut rng, order);
        let g = random_series(&mut rng, order);
        let g2 = random_series(&mut rng, order);
        let fg = f.mul(&g);
        for n in 0..=order {
            let lhs = symfunc::xi(&fg, n).map_err(e)?;
            let mut rhs = SymElement::zero(n, Basis::S);
            for i in 0..=n {
                let term = symfunc::multiply(&symfunc::xi(&f, i).map_err(e)?, &symfunc::xi(&g, n - i).map_err(e)?)
                    .map_err(e)?;
                rhs = rhs.add(&term).map_err(e)?;
            }
            ensure(lhs == rhs, || format!("trial {trial}: ξ_{n}(fg) mismatch"))?;
        }
        let left = series::diamond(&f, &g.mul(&g2), order).map_err(e)?;
        let right = series::diamond(&f, &g, order)
            .map_err(e)?
            .mul(&series::diamond(&f, &g2, order).map_err(e)?);
        ensure(left == right, || format!("trial {trial}: f⋄(g1 g2) = {left}, product {right}"))?;
        let a = frac(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        let geo = TruncSeries::from_ratio(&Poly::one(), &Poly::new(vec![Q::one(), -a.clone()]), order).map_err(e)?;
        let lhs = series::diamond(&f, &geo, order).map_err(e)?;
        ensure(lhs == f.substitute_scale(&a), || format!("trial {trial}: f⋄(1-at)^-1 = {lhs}"))?;
    }
    Ok("50 random triples at order 6".into())
}

fn criterion_10() -> Outcome {
    let mut accepted = 0;
    for r in 1..=4 {
        for q in [int(1), int(2), int(-1), frac(1, 2)] {
            let s = build_standard(r, q.clone()).map_err(e)?;
            load_and_validate(s.d(), q, s.matrix().to_vec()).map_err(e)?;
            accepted += 1;
        }
    }
    for r0 in 0..=2 {
        for r1 in 0..=2 {
            if r0 + r1 == 0 {
                continue;
            }
            for q in [int(1), int(2)] {
                let s = build_super(r0, r1, q.clone()).map_err(e)?;
                load_and_validate(s.d(), q, s.matrix().to_vec()).map_err(e)?;
                accepted += 1;
            }
        }
    }
    let diag = rmatrix::matrix_from_ints(&[2, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 2]);
    match load_and_validate(2, int(2), diag) {
        Err(Error::BraidViolation(w)) => Ok(format!("{accepted} symmetries accepted; diagonal rejected at {w:?}")),
        other => Err(format!("diagonal counterexample gave {other:?}")),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("hilbert series of standard symmetries", criterion_1),
        ("super symmetry (1,1)", criterion_2),
        ("quantum hom-space dimensions", criterion_3),
        ("E-algebra dimensions", criterion_4),
        ("character shadow and tensor identity", criterion_5),
        ("rationality detection roundtrip", criterion_6),
        ("hook support law", criterion_7),
        ("symmetric function identities", criterion_8),
        ("diamond algebra laws", criterion_9),
        ("validator soundness", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

