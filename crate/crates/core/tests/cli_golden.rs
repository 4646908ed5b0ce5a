use gpdhom::cli::{run, EXIT_INPUT, EXIT_OK, EXIT_VERIFY};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gpdhom").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn tiling_results() {
    assert_eq!(cli(&["tiling", "octagonal"]), (EXIT_OK, "H_0 = Z^9\nH_1 = Z^5\nH_2 = Z^1\n".into(), String::new()));
    assert_eq!(cli(&["tiling", "penrose"]), (EXIT_OK, "H_0 = Z^8\nH_1 = Z^5\nH_2 = Z^1\n".into(), String::new()));
}

#[test]
fn tiling_trace_is_deterministic() {
    let (code, first, _) = cli(&["tiling", "penrose", "--trace"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(cli(&["tiling", "penrose", "--trace"]).1, first);
    assert!(first.starts_with("tiling: "));
    assert!(first.contains("witness (1, 1)"));
    assert!(first.trim_end().ends_with("H_2(G) = Z^1"), "{first}");
}

#[test]
fn sft_homology_of_matrix_and_graph() {
    let (code, out, _) = cli(&["sft-homology", &data("full_shift4.txt")]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "H_0 = Z/3\nH_1 = 0\n"));
    let (code, out, _) = cli(&["sft-homology", &data("golden_mean.txt")]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "H_0 = 0\nH_1 = 0\n"));
}

#[test]
fn sft_sixterm_report() {
    let (code, out, _) = cli(&["sft-sixterm", "--mode", "factor", &data("golden_mean.txt")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "Ker(B^t+I) = 0\nKer(block) = 0\nKer(B^t-I) = 0\n\
         Coker(B^t+I) = 0\nCoker(block) = 0\nCoker(B^t-I) = 0\n\
         check rank-sum: pass (alternating sum 0)\n\
         check rank-split: pass (rank Ker block 0 = 0 + 0)\n\
         check determinant: pass (det block -1 = 1 * -1)\n\
         check order: pass (|Coker block| 1 = 1 * 1)\n\
         verdict: consistent\n"
    );
    let (code, out, _) = cli(&["sft-sixterm", "--mode", "sub", &data("full_shift4.txt")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("Ker(B^t-I) = 0\n"));
    assert!(out.contains("Coker(B^t+I) = Z/5\n"), "{out}");
}

#[test]
fn snf_output() {
    let (code, out, _) = cli(&["snf", &data("snf.txt")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("D\n2 2\n2 0\n0 4\n"), "{out}");
    assert!(out.ends_with("rank 2\ninvariant factors: 2 4\n"));
}

#[test]
fn les_verify_exit_codes() {
    let (code, out, _) = cli(&["les-verify", &data("times2_exact.txt")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("verdict: exact\n"));
    let (code, out, _) = cli(&["les-verify", &data("times1_broken.txt")]);
    assert_eq!(code, EXIT_VERIFY);
    assert!(out.contains("node 2: NOT exact"), "{out}");
    let (code, _, err) = cli(&["les-verify", &data("unknown_map.txt")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("unknown"), "{err}");
}

#[test]
fn nerve_of_cyclic_group() {
    let (code, out, _) = cli(&["nerve", &data("z2_point.txt"), "--max-degree", "3"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "H_0 = Z^1\nH_1 = Z/2\nH_2 = 0\n"));
}

#[test]
fn input_errors() {
    let (code, out, err) = cli(&["sft-homology", &data("bad_row.txt")]);
    assert_eq!((code, out.as_str()), (EXIT_INPUT, ""));
    assert!(err.starts_with("error: ") && err.contains("line 3:"), "{err}");
    let (code, _, err) = cli(&["snf", &data("short.txt")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("1 of 3 rows"), "{err}");
    let (code, _, err) = cli(&["sft-homology", &data("permutation.txt")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("axiom violated"), "{err}");
    let (code, _, _) = cli(&["sft-homology", &data("missing.txt")]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn usage() {
    assert_eq!(cli(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(cli(&["tiling"]).0, EXIT_INPUT);
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("sft-sixterm"));
}
