use hecke_core::arith::{frac, int, Q};
use hecke_core::rmatrix::{build_standard, build_super, load_and_validate, HeckeSymmetry};
use hecke_core::series::{BirankCertificate, Poly};
use hecke_core::verify::{self, VerificationReport, CONJECTURAL_BANNER, MISMATCH_NOTE};
use hecke_core::Error;
use num_traits::Zero;

/// `R(e_i⊗e_j) = c_ij e_j⊗e_i` with `c_ij c_ji = 1`: a Hecke symmetry at
/// `q = 1` outside the built-in families.
fn twisted_flip(c12: Q) -> HeckeSymmetry {
    let mut m = vec![Q::zero(); 16];
    let c21 = c12.recip();
    let mut set = |out: usize, inp: usize, v: Q| m[out * 4 + inp] = v;
    set(0, 0, int(1));
    set(3, 3, int(1));
    set(2, 1, c12);
    set(1, 2, c21);
    load_and_validate(2, int(1), m).unwrap()
}

#[test]
fn loaded_symmetry_is_flagged_but_checks_pass() {
    let sym = twisted_flip(frac(2, 3));
    assert!(sym.conjectural());
    let rep = verify::suite_hilbert(&sym, 4).unwrap();
    assert!(rep.passed(), "{}", rep.render_table());
    assert!(rep.conjectural);
    assert!(rep.render_table().contains(CONJECTURAL_BANNER));
    assert!(rep.render_machine().lines().nth(1).unwrap().contains(CONJECTURAL_BANNER));
    let data = verify::hilbert_data(&sym, 4).unwrap();
    assert_eq!(data.symmetric, vec![1, 2, 3, 4, 5]);
    assert_eq!(data.certificate.unwrap().f0, Poly::from_ints(&[1, -2, 1]));
    let rep = verify::suite_character(&sym, 3).unwrap();
    assert!(rep.passed(), "{}", rep.render_table());
}

#[test]
fn finite_symmetric_algebra_uses_exterior_side() {
    let sym = build_super(0, 2, int(2)).unwrap();
    let data = verify::hilbert_data(&sym, 4).unwrap();
    assert_eq!(data.symmetric, vec![1, 2, 1, 0, 0]);
    let cert = data.certificate.unwrap();
    assert_eq!((cert.f0, cert.f1), (Poly::one(), Poly::from_ints(&[1, -2, 1])));
    assert!(verify::suite_hilbert(&sym, 4).unwrap().passed());
}

#[test]
fn homspace_suite_for_mixed_pair() {
    let std2 = build_standard(2, int(2)).unwrap();
    let sup = build_super(1, 1, int(2)).unwrap();
    let rep = verify::suite_homspace(&sup, &std2, 4).unwrap();
    assert!(rep.passed(), "{}", rep.render_table());
    assert!(rep.checks.iter().any(|c| c.name == "A_product[4]"));
    let other = build_standard(2, int(3)).unwrap();
    assert!(matches!(verify::suite_homspace(&other, &std2, 2), Err(Error::ParameterMismatch { .. })));
}

#[test]
fn positivity_suite_flags_negative_roots() {
    let good = BirankCertificate::from_polys(Poly::from_ints(&[1, -1]), Poly::from_ints(&[1, -1])).unwrap();
    assert!(verify::suite_positivity(&good, 6).unwrap().passed());
    let bad = BirankCertificate::from_polys(Poly::from_ints(&[1, 1]), Poly::one()).unwrap();
    assert!(!bad.roots_verified);
    let rep = verify::suite_positivity(&bad, 4).unwrap();
    let first = rep.failures().next().unwrap();
    assert_eq!(first.name, "nonnegative[1]");
    assert_eq!(first.lhs, "[1]");
}

#[test]
fn report_rendering() {
    let mut rep = VerificationReport::new("demo", "std:r=1,q=2", true);
    rep.equal("one", 1, "1");
    rep.equal("two", 2, "3");
    let machine = rep.render_machine();
    let lines: Vec<&str> = machine.lines().collect();
    assert_eq!(lines[0], "# suite\tdemo\tstd:r=1,q=2");
    assert_eq!(lines[1], format!("# {CONJECTURAL_BANNER}"));
    assert_eq!(lines[2], "one\t1\t1\ttrue");
    assert_eq!(lines[3], "two\t2\t3\tfalse");
    let table = rep.render_table();
    assert!(table.contains("2 checks, 1 failed"));
    assert!(table.contains(MISMATCH_NOTE));
    assert!(!rep.passed());
}

#[test]
fn tensor_sum_is_a_power_of_the_root_sum() {
    // multinomial expansion of (Σα + Σβ)^n
    let cert = BirankCertificate::from_roots(&[int(2), frac(1, 2)], &[int(3)]).unwrap();
    let mut power = int(1);
    for n in 0..=5 {
        assert_eq!(verify::tensor_dimension_sum(&cert, n).unwrap(), power);
        power *= frac(11, 2);
    }
}
