use branchlaw_cli::report::report_field;
use branchlaw_cli::{job_from_report, parse_job, render, run_job, Command, Report, Status};

const JOBS: &[&str] = &[
    "command=epsilon case=arch a=1/2",
    "command=epsilon case=arch a=-7/2 format=machine",
    "command=epsilon case=tame q=5 exp=4",
    "command=epsilon case=tame q=5 exp=0 unif=1",
    "command=dist-char case=arch m=3/2,-1/2,-5/2 n=2,0",
    "command=dist-char case=tame q=5 m=4,8,12 n=4,20,16",
    "command=dist-char case=tame q=3 m= n=0,2",
    "command=real-packet m=5/2,1/2,-3/2 n=1,-1",
    "command=compact-branch n=2 lambda=-1/2,1/2 mu=-1,0,1",
    "command=compact-branch lambda=0 mu=-1/2,3/2",
    "command=gl-branch pi=a,b mu=a",
    "command=gl-branch pi=a,b mu=a q=3",
    "command=gl-branch pi=a,a mu=a q=3",
    "command=gl-branch pi=c:2,d mu=e:2",
    "command=unitary-depth0 q=5 m=4,8,12 n=4,20",
    "command=unitary-depth0 q=3 m=2,4 n=0,6",
];

fn run(doc: &str) -> Report {
    run_job(&parse_job(doc).unwrap()).unwrap_or_else(|e| panic!("{doc}: {e}"))
}

fn value<'a>(r: &'a Report, quantity: &str) -> &'a str {
    &r.rows.iter().find(|row| row.quantity == quantity).unwrap_or_else(|| panic!("no row {quantity}")).value
}

#[test]
fn every_example_job_succeeds() {
    for doc in JOBS {
        assert_eq!(run(doc).status, Status::Ok, "{doc}");
    }
}

#[test]
fn machine_output_round_trips_to_the_same_job() {
    for doc in JOBS {
        let job = parse_job(doc).unwrap();
        let text = run_job(&job).unwrap().render_machine();
        assert_eq!(job_from_report(&text).unwrap(), job, "{doc}");
    }
}

#[test]
fn machine_output_is_deterministic() {
    for doc in JOBS {
        let a = run(doc).render_machine();
        let b = run(doc).render_machine();
        assert_eq!(a, b, "{doc}");
    }
}

#[test]
fn machine_output_rows_are_complete() {
    let text = run("command=dist-char case=tame q=5 m=4,8,12 n=4,20,16").render_machine();
    assert_eq!(report_field(&text, "schema"), Some("branchlaw-report/1"));
    assert_eq!(report_field(&text, "command"), Some("dist-char"));
    let rows: usize = report_field(&text, "row.count").unwrap().parse().unwrap();
    for i in 0..rows {
        for field in ["quantity", "value", "rule"] {
            let v = report_field(&text, &format!("row.{i}.{field}"));
            assert!(v.is_some_and(|v| !v.is_empty()), "row {i} lacks {field}");
        }
    }
    assert_eq!(report_field(&text, "status"), Some("ok"));
    assert_eq!(report_field(&text, "exit_code"), Some("0"));
}

#[test]
fn tame_distinguished_instance_with_two_matches() {
    let r = run("command=dist-char case=tame q=5 m=4,8,12 n=4,20,16");
    assert_eq!(value(&r, "p"), "2");
    assert_eq!(value(&r, "chi(e1)"), "-1");
    assert_eq!(value(&r, "chi(e2)"), "-1");
    assert_eq!(value(&r, "chi(e3)"), "+1");
    assert_eq!(value(&r, "chi(f1)"), "+1");
    assert_eq!(value(&r, "chi(-1,1)"), "+1");
    assert_eq!(value(&r, "chi(1,-1)"), "+1");
}

#[test]
fn gl_branch_values() {
    let r = run("command=gl-branch pi=a,b mu=a q=3");
    assert_eq!(value(&r, "dim.hom"), "2");
    assert_eq!(value(&r, "dim.hom.oracle"), "2");
    let r = run("command=gl-branch pi=a,a mu=a q=3");
    assert_eq!(value(&r, "dim.hom"), "3");
    let r = run("command=gl-branch pi=c:2,d mu=e:2");
    assert_eq!(value(&r, "dim.hom"), "1");
    assert_eq!(value(&r, "supports.disjoint"), "yes");
}

#[test]
fn epsilon_values() {
    assert_eq!(value(&run("command=epsilon case=arch a=1/2"), "eps(z^1/2)"), "+1");
    assert_eq!(value(&run("command=epsilon case=arch a=-3/2"), "eps(z^-3/2)"), "-1");
    let r = run("command=epsilon case=tame q=5 exp=4");
    assert_eq!(value(&r, "conductor"), "1");
    assert_eq!(value(&r, "eps"), "+1");
    assert_eq!(value(&run("command=epsilon case=tame q=5 exp=0"), "eps"), "-1");
}

#[test]
fn engine_errors_surface() {
    for doc in [
        "command=epsilon case=arch a=1",
        "command=compact-branch lambda=1/2,-1/2 mu=-1,0,1",
        "command=compact-branch n=3 lambda=-1/2,1/2 mu=-1,0,1",
        "command=dist-char case=tame q=5 m=1 n=0",
        "command=dist-char case=arch m=1/2,1/2 n=0",
        "command=gl-branch pi=a,b mu=a,a",
        "command=gl-branch pi=a,b,c,d,e mu=a,b,c,d q=3",
        "command=gl-branch pi=c:2,d mu=e:2 q=3",
        "command=unitary-depth0 q=6 m=0 n=",
        "command=verify-all bound=-1",
    ] {
        let job = parse_job(doc).unwrap();
        assert!(run_job(&job).is_err(), "{doc}");
    }
}

#[test]
fn failed_check_is_a_counterexample() {
    let mut r = Report::new(parse_job("command=verify-all").unwrap());
    r.check("something", true, "rule");
    assert_eq!(r.exit_code(), 0);
    r.check("something-else", false, "rule");
    assert_eq!(r.status, Status::Counterexample);
    assert_eq!(r.exit_code(), 1);
    assert!(r.render_machine().contains("status=counterexample\nexit_code=1\n"));
}

#[test]
fn table_rendering_lists_every_row() {
    let job = parse_job("command=real-packet m=5/2,1/2,-3/2 n=1,-1").unwrap();
    assert_eq!(job.command, Command::RealPacket);
    let r = run_job(&job).unwrap();
    let table = render(&r);
    for row in &r.rows {
        assert!(table.contains(&row.quantity));
    }
    assert!(table.ends_with("status: ok\n"));
}
