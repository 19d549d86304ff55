use std::io::Cursor;
use std::path::PathBuf;

use subshift_games::automata::Dfa;
use subshift_games::cli::run;

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    path.to_str().unwrap().to_string()
}

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str], stdin: &str) -> Output {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("subshift-games").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn read(name: &str) -> String {
    std::fs::read_to_string(golden(name)).unwrap()
}

/// Golden DFA files carry comments; compare their canonical rendering.
fn canonical(text: &str) -> String {
    Dfa::parse_text(text).unwrap().to_text()
}

#[test]
fn winset_example() {
    let out = cli(&["winset", "--lang", &golden("example.lang")], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, read("example.winset"));
}

#[test]
fn winset_from_stdin() {
    let out = cli(&["winset", "--lang", "-"], &read("example.lang"));
    assert_eq!(out.stdout, "AAA\nAAB\nBAA\n");
}

#[test]
fn counting_winset_has_one_order_per_word() {
    let out = cli(&["winset", "--counting", "--lang", "-"], "alphabet: 0 1 2\n00\n01\n12\n22\n");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.lines().count(), 4);
}

#[test]
fn winset_cap() {
    let long = format!("alphabet: 0 1\n{}\n", "0".repeat(17));
    let out = cli(&["winset", "--lang", "-"], &long);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("cap 16"), "{}", out.stderr);
    let out = cli(&["winset", "--lang", "-", "--cap", "17"], &long);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), 1);
}

#[test]
fn game_prints_winner_and_strategy() {
    let out = cli(&["game", "--lang", &golden("example.lang"), "--order", "BAB"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("winner: B"));
    assert_eq!(lines.next(), Some("λ -> 0"));
}

#[test]
fn game_on_member_order() {
    let out = cli(&["game", "--lang", &golden("example.lang"), "--order", "AAB"], "");
    assert!(out.stdout.starts_with("winner: A\n"));
}

#[test]
fn play_machine_b_opens_with_zero_and_wins() {
    for human in ["0", "1"] {
        let out = cli(
            &["play", "--lang", &golden("example.lang"), "--order", "BAB", "--machine", "B"],
            &format!("{human}\n"),
        );
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("move 1: machine (B) plays 0"));
        assert!(out.stdout.ends_with("winner: B\n"), "{}", out.stdout);
    }
}

#[test]
fn play_reprompts_on_invalid_input() {
    let out = cli(&["play", "--lang", &golden("example.lang"), "--order", "BAB", "--machine", "B"], "x\n2\n1\n");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.matches("invalid symbol").count(), 2);
    assert!(out.stdout.contains("word: 01"));
}

#[test]
fn play_machine_a_on_all_a_order_wins() {
    let out = cli(&["play", "--lang", &golden("example.lang"), "--order", "AAA", "--machine", "a"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("word: 000\nwinner: A\n"));
}

#[test]
fn play_machine_a_loses_on_bab_against_the_b_line() {
    // the human replays B's winning line: open with 0, then complete to a non-member
    let out = cli(&["play", "--lang", &golden("example.lang"), "--order", "BAB", "--machine", "A"], "0\n1\n");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.ends_with("winner: B\n"), "{}", out.stdout);
}

#[test]
fn play_ends_with_error_on_eof() {
    let out = cli(&["play", "--lang", &golden("example.lang"), "--order", "BAB", "--machine", "A"], "");
    assert_eq!(out.code, 1);
}

#[test]
fn winshift_emits_reversed_subset_dfa() {
    let out = cli(&["winshift", "--dfa", &golden("even.dfa"), "--emit-reversed"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, canonical(&read("even_reversed.dfa")));
}

#[test]
fn winshift_emits_alternating_automaton() {
    let out = cli(&["winshift", "--dfa", &golden("even.dfa"), "--emit-alternating"], "");
    assert_eq!(out.stdout, read("even_alternating.txt"));
}

#[test]
fn winshift_output_round_trips() {
    for extra in [None, Some("--two-directional")] {
        let mut args = vec!["winshift", "--dfa", "-"];
        args.extend(extra);
        let out = cli(&args, &read("even.dfa"));
        assert_eq!(out.code, 0, "{}", out.stderr);
        let d = Dfa::parse_text(&out.stdout).unwrap();
        assert_eq!(d.to_text(), out.stdout);
    }
}

#[test]
fn winshift_completes_partial_input() {
    let partial = "alphabet: 0 1\nstates: 1\ninitial: 0\naccepting: 0\n0 0 0\n";
    let out = cli(&["winshift", "--dfa", "-"], partial);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let d = Dfa::parse_text(&out.stdout).unwrap();
    assert!(d.accepts(&[0, 0, 0]));
    assert!(!d.accepts(&[1]));
}

#[test]
fn zoo_even_matches_golden_file() {
    let out = cli(&["zoo", "--name", "even"], "");
    assert_eq!(out.stdout, canonical(&read("even.dfa")));
}

#[test]
fn zoo_writes_file_and_forbidden_sft() {
    let dir = std::env::temp_dir().join(format!("subshift-games-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("golden.dfa");
    let out = cli(&["zoo", "--forbidden", "-", "--out", target.to_str().unwrap()], "alphabet: 0 1\n11\n");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let written = std::fs::read_to_string(&target).unwrap();
    let named = cli(&["zoo", "--name", "goldenmean"], "");
    let a = Dfa::parse_text(&written).unwrap();
    let b = Dfa::parse_text(&named.stdout).unwrap();
    assert_eq!(a.language_eq(&b), Ok(true));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn zoo_unknown_name_lists_choices() {
    let out = cli(&["zoo", "--name", "nope"], "");
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("goldenmean"));
}

#[test]
fn entropy_csv() {
    let out = cli(&["entropy", "--dfa", &golden("even.dfa"), "--n", "3", "--spectral", "--csv"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "n,count,h_n");
    assert_eq!(lines[1], "1,2,1.000000000000");
    // every length-3 word except 101
    assert_eq!(lines[3].split(',').nth(1), Some("7"));
    assert!(lines[4].starts_with("spectral,1.618033988"));
}

#[test]
fn table6_golden_files() {
    let out = cli(&["table6", "--family", "goldext", "--kmax", "10", "--csv"], "");
    assert_eq!(out.stdout, read("table6_goldext.csv"));
    let out = cli(&["table6", "--family", "gap", "--m", "2", "--kmax", "10", "--csv"], "");
    assert_eq!(out.stdout, read("table6_gap_m2.csv"));
}

#[test]
fn table6_rejects_bad_gap() {
    assert_eq!(cli(&["table6", "--family", "goldext", "--m", "2", "--kmax", "3"], "").code, 1);
    assert_eq!(cli(&["table6", "--family", "gap", "--kmax", "3"], "").code, 1);
}

#[test]
fn verify_binary_cardinality() {
    let out = cli(&["verify", "--suite", "binary-cardinality", "--nmax", "4"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("65536 languages checked at n=4, 0 failures"));
    assert!(out.stdout.contains("suite binary-cardinality: passed="));
}

#[test]
fn verify_unknown_suite() {
    assert_eq!(cli(&["verify", "--suite", "nope"], "").code, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cli(&[], "").code, 2);
    assert_eq!(cli(&["winset"], "").code, 2);
    assert_eq!(cli(&["winset", "--lang", "x", "--bogus"], "").code, 2);
    assert_eq!(cli(&["game", "--lang", "x", "--order", "BXA"], "").code, 2);
    assert_eq!(cli(&["zoo"], "").code, 2);
    assert_eq!(cli(&["winshift", "--dfa", "x", "--two-directional", "--emit-reversed"], "").code, 2);
}

#[test]
fn help_exits_zero() {
    let out = cli(&["--help"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("winshift"));
}

#[test]
fn missing_file_is_a_domain_error() {
    let out = cli(&["winset", "--lang", "/nonexistent/file.lang"], "");
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error: /nonexistent/file.lang"));
}

#[test]
fn malformed_dfa_names_the_line() {
    let out = cli(&["winshift", "--dfa", "-"], "alphabet: 0 1\nstates: 1\ninitial: 0\naccepting:\n0 0 5\n");
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 5"), "{}", out.stderr);
}
