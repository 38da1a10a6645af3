use padic_linv::cli::run;

fn argv(line: &str) -> Vec<String> {
    std::iter::once("padic-linv").chain(line.split_whitespace()).map(String::from).collect()
}

fn bin() -> std::process::Command {
    std::process::Command::new(env!("CARGO_BIN_EXE_padic-linv"))
}

fn stdout(line: &str) -> (i32, String) {
    let out = bin().args(line.split_whitespace()).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&argv("frobnicate")), 2);
    assert_eq!(run(&argv("padic log --p 5")), 2);
    assert_eq!(run(&argv("localalg model --case iii --r 3")), 2);
    assert_eq!(run(&argv("--help")), 0);
}

#[test]
fn domain_errors_exit_with_one() {
    assert_eq!(run(&argv("padic log --p 6 --x 7")), 1);
    assert_eq!(run(&argv("padic exp --p 5 --x 1/2")), 1);
    assert_eq!(run(&argv("localalg model --case i --r 3")), 1);
    assert_eq!(run(&argv("linv fg-check --dKprime -4 --p 7 --prec 10")), 1);
    assert_eq!(run(&argv("padic log --p 5 --x 6 --prec 4")), 1);
}

#[test]
fn json_documents_are_versioned_and_deterministic() {
    let line = "--json linv report --dK -4 --dF 5 --p 29 --prec 16";
    let (code, first) = stdout(line);
    assert_eq!(code, 0);
    let (_, second) = stdout(line);
    assert_eq!(first, second);
    let doc: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(doc["schema"], "v1");
    assert_eq!(doc["command"], "linv report");
    assert_eq!(doc["result"]["config"]["dK"], -4);
    assert!(doc["result"]["ellMinus"]["digits"].is_array());
}

#[test]
fn precision_from_the_environment() {
    let out = bin().args(["--json", "padic", "log", "--p", "5", "--x", "6"]).env("PADIC_LINV_PREC", "12").output().unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // log 6 has valuation 1, so relative precision is one less than absolute
    assert_eq!(doc["result"]["prec"], 11);
}

#[test]
fn scalar_json_round_trips_through_the_command_line() {
    let (_, text) = stdout("--json padic teich --p 7 --x 3 --prec 10");
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let omega = doc["result"].to_string();
    let out = bin().args(["--json", "--prec", "10", "padic", "log", "--p", "7", "--x", &omega]).output().unwrap();
    let log: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(log["result"]["val"], "inf");
}

#[test]
fn check_commands_report_their_verdicts() {
    let (code, text) = stdout("theta up-check --disc -23 --p 59 --len 600");
    assert_eq!(code, 0);
    assert!(text.contains("semisimple false"));
    let (code, text) = stdout("--json lfun eval --chi quad:-4*omega^1 --p 5 --s 0 --prec 12");
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["result"]["value"]["val"], "inf");
    let (code, text) = stdout("--json localalg model --case ii --r 3 --D 10 --report");
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["result"]["congruencePsiTau"]["exponent"], 2);
    assert_eq!(doc["result"]["gorenstein"]["socleDim"], 3);
}

#[test]
fn stored_configuration_is_verified() {
    let (_, text) = stdout("--json linv report --dK -4 --dF 5 --p 29 --prec 12");
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let dir = std::env::temp_dir().join(format!("padic-linv-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.json");
    std::fs::write(&path, doc["result"]["config"].to_string()).unwrap();
    assert_eq!(run(&argv(&format!("linv report --config {}", path.display()))), 0);

    let mut tampered = doc["result"]["config"].clone();
    tampered["embedK"]["digits"][0] = serde_json::json!((tampered["embedK"]["digits"][0].as_u64().unwrap() + 1) % 29);
    std::fs::write(&path, tampered.to_string()).unwrap();
    assert_eq!(run(&argv(&format!("linv report --config {}", path.display()))), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
