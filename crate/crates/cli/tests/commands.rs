use assert_cmd::Command;
use invalg::{EquivalenceClasses, Partition, VerificationReport};
use invalg_cli::report::{AnalyzeReport, CompareReport, CountReport, IsoReport, MoritaCommandReport, PartitionList, PermReport};
use serde::de::DeserializeOwned;

fn invalg(args: &[&str]) -> std::process::Output {
    Command::cargo_bin("invalg").unwrap().args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = invalg(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json<T: DeserializeOwned + serde::Serialize>(args: &[&str]) -> T {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let text = stdout(&full);
    let value: T = serde_json::from_str(&text).unwrap();
    // re-encoding reproduces the document byte for byte
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text);
    value
}

fn code(args: &[&str]) -> Option<i32> {
    invalg(args).status.code()
}

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

#[test]
fn analyze_reports_every_invariant() {
    let r: AnalyzeReport = json(&["analyze", "8,2,1"]);
    assert_eq!(r.g_vector.values(), &[11, 4, 1]);
    assert_eq!(r.h_vector.values(), &[6, 1, 1]);
    assert_eq!(r.epsilon, "x^2 - 4x + 11");
    assert_eq!(r.dimension, 19);
    assert_eq!(r.wedderburn_text.as_deref(), Some("k^6 x M_2(k) x M_3(k)"));
    let shape = r.wedderburn.unwrap();
    assert_eq!((shape.multiplicity(1), shape.multiplicity(2), shape.multiplicity(3)), (6, 1, 1));
    assert!(r.determinant.holds());

    let text = stdout(&["analyze", "8,2,1"]);
    assert!(text.contains("x^2 - 4x + 11"));
    assert!(text.contains("(6,1,1)"));
}

#[test]
fn analyze_repeated_root() {
    let r: AnalyzeReport = json(&["analyze", "4,4,1"]);
    assert_eq!(r.epsilon, "x^2 - 6x + 9");
    assert_eq!(r.epsilon_coefficients.coefficients(), &[9, -6, 1]);
}

#[test]
fn analyze_modular_characteristic() {
    let text = stdout(&["analyze", "4,2", "--char", "2"]);
    assert!(text.contains("not semisimple (2 divides 4 and 2)"), "{text}");
    assert!(!text.contains("wedderburn"));
    let r: AnalyzeReport = json(&["analyze", "4,2", "--char", "3"]);
    assert!(r.semisimple);
    assert!(r.wedderburn.is_some());
}

#[test]
fn compare_examples() {
    let r: CompareReport = json(&["compare", "8,2,1", "7,2,2"]);
    assert!(r.equivalent);
    assert_eq!(r.isomorphic, Some(true));

    let r: CompareReport = json(&["compare", "4,2,2", "2,1,1"]);
    assert!(r.equivalent);
    assert_eq!(r.isomorphic, Some(false));
    assert_eq!(r.degrees, [8, 4]);

    let r: CompareReport = json(&["compare", "4,1", "4"]);
    assert!(!r.equivalent);
    assert_eq!(r.isomorphic, Some(false));
    assert_eq!(r.morita, Some(true));
    assert_eq!(r.simple_blocks, Some([4, 4]));
    assert_eq!(r.signed_values, Some([-4, 4]));
}

#[test]
fn compare_verdict_is_data_not_error() {
    assert_eq!(code(&["compare", "8,2,1", "6,3,2"]), Some(0));
    let r: CompareReport = json(&["compare", "4,1", "3,2", "--not-closed"]);
    assert!(r.equivalent);
    assert_eq!(r.isomorphic, None);
    assert_eq!(r.morita, None);
    assert!(r.note.unwrap().contains("algebraically closed"));
}

#[test]
fn iso_and_morita_commands() {
    let r: IsoReport = json(&["iso", "4,1", "3,2"]);
    assert!(r.isomorphic);
    assert_eq!(r.shape_text[0], "k^3 x M_2(k)");
    let r: IsoReport = json(&["iso", "17,11,8,2", "17,11,6,4"]);
    assert!(r.isomorphic);
    let r: MoritaCommandReport = json(&["morita", "4,1", "4"]);
    assert!(r.verdict.equivalent);
    assert_eq!(r.verdict.signed_values, [-4, 4]);
}

#[test]
fn structure_commands_refuse_unsupported_fields() {
    let out = invalg(&["iso", "4,1", "3,2", "--not-closed"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("requires algebraically closed field"));
    assert_eq!(code(&["morita", "4,2", "3", "--char", "2"]), Some(2));
    assert_eq!(code(&["analyze", "4,2", "--char", "4"]), Some(2));
}

#[test]
fn classify_and_friends() {
    let c: EquivalenceClasses = json(&["classify", "3", "11"]);
    let mut sizes = c.sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(sizes, [4, 2, 2, 1, 1]);
    let big = c.classes.iter().find(|k| k.members.len() == 4).unwrap();
    assert_eq!(big.members, ["8,2,1", "7,2,2", "6,4,1", "5,4,2"].map(p));

    let l: PartitionList = json(&["self-equivalent", "3", "9"]);
    assert_eq!(l.partitions, [p("4,4,1"), p("3,3,3")]);

    let r: CountReport = json(&["count", "3", "7"]);
    assert_eq!(r.p, 4);

    let l: PartitionList = json(&["enumerate", "3", "7"]);
    assert_eq!(l.partitions, ["5,1,1", "4,2,1", "3,3,1", "3,2,2"].map(p));
}

#[test]
fn perm_command() {
    let r: PermReport = json(&["perm", "(1 2 3)(4 5)"]);
    assert_eq!(r.cycle_type, p("3,2"));
    assert_eq!((r.pair_orbits, r.commutant_nullity), (7, Some(7)));
    let r: PermReport = json(&["perm", "(1 2)", "--degree", "20", "--matrix-cap", "12"]);
    assert_eq!(r.cycle_type, p("2,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"));
    assert_eq!(r.commutant_nullity, None);
    assert_eq!(code(&["perm", "(1 2", "--degree", "3"]), Some(2));
}

#[test]
fn verify_exit_codes() {
    let r: VerificationReport = json(&["verify", "--nmax", "10"]);
    assert!(r.passed());
    assert!(r.families.len() >= 8);

    let r: VerificationReport = json(&["verify", "--nmax", "0"]);
    assert!(r.families.is_empty());

    let out = invalg(&["verify", "--nmax", "10", "--inject-fault", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let r: VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!r.family("g_vector_vs_brute_g").unwrap().passed());
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["analyze", "4,0"][..],
        &["analyze", "3,x"],
        &["analyze", ""],
        &["classify", "0", "5"],
        &["classify", "4", "3"],
        &["bogus"],
    ] {
        assert_eq!(code(args), Some(2), "{args:?}");
    }
    let out = invalg(&["analyze", "4,0"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("part must be positive"));
}

#[test]
fn resource_bounds_exit_four() {
    assert_eq!(code(&["classify", "3", "500"]), Some(4));
    assert_eq!(code(&["count", "2", "1000"]), Some(4));
    assert_eq!(code(&["verify", "--nmax", "1000"]), Some(4));
    assert_eq!(code(&["verify", "--nmax", "5", "--matrix-cap", "99"]), Some(4));
}

#[test]
fn csv_has_constant_width() {
    let cases: [&[&str]; 8] = [
        &["analyze", "8,2,1"],
        &["compare", "4,1", "4"],
        &["iso", "4,1", "3,2"],
        &["morita", "4,1", "4"],
        &["classify", "4", "14"],
        &["self-equivalent", "3", "9"],
        &["count", "3", "11"],
        &["verify", "--nmax", "6"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.extend(["--format", "csv"]);
        let text = stdout(&full);
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let width = rdr.headers().unwrap().len();
        let mut rows = 0;
        for rec in rdr.records() {
            assert_eq!(rec.unwrap().len(), width, "{args:?}");
            rows += 1;
        }
        assert!(rows > 0, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classify", "4", "16", "--format", "json"][..],
        &["verify", "--nmax", "8"],
        &["analyze", "12,4,3,1"],
    ] {
        assert_eq!(invalg(args).stdout, invalg(args).stdout, "{args:?}");
    }
}
