//! The acceptance gate: eight criteria, each a scenario of the
//! verification suite run at its required horizon, with wall-clock limits
//! where the criterion carries one.
//!
//! Every test prints `criterion N: pass` or `criterion N: FAIL` (visible
//! under `cargo test --test acceptance -- --nocapture`), then asserts.

use std::time::{Duration, Instant};

use monoideal_cli::suite::{self, CheckResult};

fn finish(criterion: u32, checks: &[CheckResult], elapsed: Duration, limit: Option<Duration>) {
    let all_pass = checks.iter().all(|c| c.pass);
    let in_time = limit.is_none_or(|cap| elapsed <= cap);
    let verdict = if all_pass && in_time { "pass" } else { "FAIL" };
    println!("criterion {criterion}: {verdict} ({:.1}s)", elapsed.as_secs_f64());
    for check in checks.iter().filter(|c| !c.pass) {
        println!(
            "  failed: {}{}",
            check.name,
            check.witness.as_deref().map(|w| format!(" [{w}]")).unwrap_or_default()
        );
    }
    assert!(all_pass, "criterion {criterion} has failing checks");
    if let Some(cap) = limit {
        assert!(
            in_time,
            "criterion {criterion} took {:.1}s, limit {:.1}s",
            elapsed.as_secs_f64(),
            cap.as_secs_f64()
        );
    }
}

#[test]
fn criterion_1_eight_variable_construction() {
    let started = Instant::now();
    let checks = suite::scenario_a().expect("scenario in budget");
    finish(1, &checks, started.elapsed(), Some(Duration::from_secs(5)));
}

#[test]
fn criterion_2_odd_cycle_cover_profiles_to_the_fourth_power() {
    let started = Instant::now();
    let checks = suite::scenario_b(4).expect("scenario in budget");
    finish(2, &checks, started.elapsed(), Some(Duration::from_secs(60)));
}

#[test]
fn criterion_3_all_trees_through_seven_vertices() {
    let started = Instant::now();
    let checks = suite::scenario_c(3).expect("scenario in budget");
    finish(3, &checks, started.elapsed(), Some(Duration::from_secs(600)));
}

#[test]
fn criterion_4_product_identity_on_sampled_instances() {
    let started = Instant::now();
    let checks = suite::scenario_d(0).expect("scenario in budget");
    finish(4, &checks, started.elapsed(), None);
}

#[test]
fn criterion_5_colon_towers_and_inherited_torsion_freeness() {
    let started = Instant::now();
    let checks = suite::scenario_e(3, 0).expect("scenario in budget");
    finish(5, &checks, started.elapsed(), None);
}

#[test]
fn criterion_6_embedded_prime_lifts() {
    let started = Instant::now();
    let checks = suite::scenario_f(0).expect("scenario in budget");
    finish(6, &checks, started.elapsed(), None);
}

#[test]
fn criterion_7_oracle_cross_checks() {
    let started = Instant::now();
    let checks = suite::scenario_g(0).expect("scenario in budget");
    finish(7, &checks, started.elapsed(), None);
}

#[test]
fn criterion_8_symbolic_versus_ordinary_powers() {
    let started = Instant::now();
    let checks = suite::symbolic_separation(4).expect("scenario in budget");
    finish(8, &checks, started.elapsed(), None);
}
