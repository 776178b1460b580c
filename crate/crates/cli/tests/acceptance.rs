//! Acceptance battery: every release-gating property, one test per
//! criterion, exact integer arithmetic throughout (tolerance = equality).
//! Each test prints a single PASS line on success; a failing line carries the
//! first offending check of the suite that produced it.

use std::process::Command;

use num_bigint::BigUint;
use yext::sample::{random_module, Rng, SampleCfg};
use yext::{ext_group, ext_order, FpModule, Matrix, RingSpec};
use yext_cli::laws::{
    ab4, baer_group, bilinear, bilinear_composed, cardinality, coherence, phi_roundtrip,
    phin_roundtrip, psi_roundtrip, psin_roundtrip, LawsCfg,
};
use yext_cli::Report;

fn rings_all() -> Vec<RingSpec> {
    vec![
        RingSpec::integers(),
        RingSpec::modular(4).unwrap(),
        RingSpec::modular(8).unwrap(),
        RingSpec::modular(12).unwrap(),
    ]
}

fn rings_modular() -> Vec<RingSpec> {
    vec![
        RingSpec::modular(4).unwrap(),
        RingSpec::modular(8).unwrap(),
        RingSpec::modular(12).unwrap(),
    ]
}

fn assert_clean(report: &Report, what: &str) {
    let failed: Vec<String> = report
        .lines
        .iter()
        .filter(|l| !l.pass)
        .map(|l| format!("{} {}: {}", l.suite, l.instance, l.witness))
        .collect();
    assert!(
        failed.is_empty(),
        "{what}: {} of {} checks failed\n{}",
        failed.len(),
        report.total(),
        failed.join("\n")
    );
}

#[test]
fn criterion_01_baer_group_laws() {
    for ring in rings_all() {
        let cfg = LawsCfg::new(ring, 200, 0xACC1 ^ ring.modulus());
        assert_clean(&baer_group(&cfg), &format!("baer group laws over {ring}"));
    }
    println!("criterion 1 (baer group laws, both deciders, 4 rings x 200): PASS");
}

#[test]
fn criterion_02_bilinearity_ledger() {
    for ring in rings_all() {
        let cfg = LawsCfg::new(ring, 100, 0xACC2 ^ ring.modulus());
        assert_clean(&bilinear(&cfg), &format!("degree-one bilinearity over {ring}"));
        assert_clean(
            &bilinear_composed(&cfg),
            &format!("composed bilinearity over {ring}"),
        );
    }
    println!("criterion 2 (bilinearity ledger, 4 rings x 100 per identity): PASS");
}

#[test]
fn criterion_03_psi1_bijectivity() {
    // Family sizes cycle 1..4 inside the suite; 400 cases gives 100 per size.
    let cfg = LawsCfg::new(RingSpec::modular(4).unwrap(), 400, 0xACC3);
    assert_clean(&psi_roundtrip(&cfg), "degree-one gluing round trips");
    println!("criterion 3 (psi_1 bijectivity, |I| in 1..4, 100 cases each): PASS");
}

#[test]
fn criterion_04_psi_n_isomorphism() {
    for ring in [RingSpec::modular(4).unwrap(), RingSpec::modular(8).unwrap()] {
        for degree in [2usize, 3] {
            // Family sizes cycle 1..2; 200 cases gives 100 per (degree, size).
            let cfg = LawsCfg::new(ring, 200, 0xACC4 ^ ring.modulus() ^ (degree as u64) << 8);
            assert_clean(
                &psin_roundtrip(&cfg, degree),
                &format!("degree-{degree} round trips over {ring}"),
            );
        }
    }
    println!("criterion 4 (psi_n isomorphism and additivity, n in 2..3): PASS");
}

#[test]
fn criterion_05_oracle_anchor_values() {
    // Ext^n over Z/4 of Z/2 with itself has order two in every degree.
    let z4 = RingSpec::modular(4).unwrap();
    let m2 = FpModule::present(z4, 1, &Matrix::from_i64(1, 1, &[2])).unwrap();
    for degree in 1..=3 {
        assert_eq!(
            ext_order(&m2, &m2, degree),
            Some(BigUint::from(2u32)),
            "degree {degree}"
        );
    }

    // Over Z everything vanishes beyond degree one.
    let z = RingSpec::integers();
    let cfg = SampleCfg {
        max_gens: 3,
        max_entry: 8,
    };
    let mut rng = Rng::new(0xACC5);
    for _ in 0..50 {
        let c = random_module(&mut rng, z, &cfg);
        let a = random_module(&mut rng, z, &cfg);
        for degree in 2..=3 {
            assert!(
                ext_group(&c, &a, degree).is_empty(),
                "Ext^{degree}_Z should vanish"
            );
        }
    }

    // Ext^1_Z(Z/2, Z) has order two.
    let z2 = FpModule::present(z, 1, &Matrix::from_i64(1, 1, &[2])).unwrap();
    let free = FpModule::free(z, 1);
    assert_eq!(ext_order(&z2, &free, 1), Some(BigUint::from(2u32)));
    println!("criterion 5 (oracle anchors: Z/4 tower, Z vanishing, Ext^1_Z(Z/2,Z)): PASS");
}

#[test]
fn criterion_06_cardinality_identity() {
    for ring in rings_modular() {
        let cfg = LawsCfg::new(ring, 50, 0xACC6 ^ ring.modulus());
        assert_clean(&cardinality(&cfg), &format!("cardinality identity over {ring}"));
    }
    println!("criterion 6 (|Ext^n(sum, B)| = product of orders + vanishing): PASS");
}

#[test]
fn criterion_07_phi_n_dual() {
    let cfg1 = LawsCfg::new(RingSpec::modular(4).unwrap(), 100, 0xACC7);
    assert_clean(&phi_roundtrip(&cfg1), "degree-one dual round trips");
    for ring in [RingSpec::modular(4).unwrap(), RingSpec::modular(8).unwrap()] {
        for degree in [2usize, 3] {
            let cfg = LawsCfg::new(ring, 200, 0xACC7 ^ ring.modulus() ^ (degree as u64) << 8);
            assert_clean(
                &phin_roundtrip(&cfg, degree),
                &format!("degree-{degree} dual round trips over {ring}"),
            );
        }
    }
    println!("criterion 7 (phi_n dual isomorphism and additivity): PASS");
}

#[test]
fn criterion_08_ab4_characterization() {
    let cfg = LawsCfg::new(RingSpec::modular(4).unwrap(), 100, 0xACC8);
    assert_clean(&ab4(&cfg), "colimit comparison on mono families");
    println!("criterion 8 (colimit comparison: sections, retractions, sum of monos): PASS");
}

#[test]
fn criterion_09_oracle_coherence() {
    for ring in [RingSpec::modular(4).unwrap(), RingSpec::modular(8).unwrap()] {
        let cfg = LawsCfg::new(ring, 100, 0xACC9 ^ ring.modulus());
        assert_clean(&coherence(&cfg), &format!("oracle coherence over {ring}"));
    }
    println!("criterion 9 (oracle additivity and action intertwining, 200 cases): PASS");
}

#[test]
fn criterion_10_cli_contract() {
    let exe = env!("CARGO_BIN_EXE_yext");
    let workspace = "\
ring 4
module M [2]
module R []
morphism f M R [2]
morphism g R M [1]
ses E f g
";
    let dir = std::env::temp_dir().join("yext-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("generator.ws");
    std::fs::write(&path, workspace).unwrap();

    let run = |args: &[&str]| {
        let output = Command::new(exe)
            .args(args)
            .output()
            .expect("binary must run");
        (
            output.status.code(),
            String::from_utf8_lossy(&output.stdout).trim().to_string(),
        )
    };

    let file = path.to_str().unwrap();
    let (code, out) = run(&["extgroup", "M", "M", "1", "--file", file]);
    assert_eq!(code, Some(0));
    assert_eq!(out, "Z/2");

    let (code, out) = run(&["class", "E", "--file", file]);
    assert_eq!(code, Some(0));
    assert_ne!(out, "0", "the generator class must be nonzero");

    let (code, out) = run(&["sum", "E", "E", "--file", file]);
    assert_eq!(code, Some(0));
    assert_eq!(out, "0", "twice the generator must vanish");

    let (code, out) = run(&["laws", "--suite", "all", "--seed", "7", "--cases", "25"]);
    assert_eq!(code, Some(0), "laws run must exit cleanly:\n{out}");
    assert!(out.ends_with(&format!(
        "TOTAL {}/{}",
        out.lines().count() - 1,
        out.lines().count() - 1
    )));

    // Deterministic report: same seed, same bytes.
    let (_, again) = run(&["laws", "--suite", "all", "--seed", "7", "--cases", "25"]);
    assert_eq!(out, again, "report must be stable line by line for a fixed seed");

    println!("criterion 10 (CLI contract on the documented session): PASS");
}
