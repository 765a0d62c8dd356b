//! Built-in verification battery: quick invariant checks printed one per
//! line, exit 1 on any failure. A fast subset of the full acceptance suite.

use orbitcert_core::catalog;
use orbitcert_core::classify::{classify_space, ClassifyOptions, Status};
use orbitcert_core::criteria;
use orbitcert_core::root_system::{Family, RootSystem};
use orbitcert_core::weyl::{self, Session};

struct Harness {
    failures: u32,
}

impl Harness {
    fn check(&mut self, name: &str, ok: bool) {
        println!("{} {name}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures += 1;
        }
    }
}

pub fn run() -> u8 {
    let mut h = Harness { failures: 0 };

    // reflection closure on every catalog system
    let mut closure_ok = true;
    for space in catalog::list_spaces() {
        let Ok(rs) = space.build_restricted() else {
            continue;
        };
        for m in 0..rs.num_roots() {
            for i in 0..rs.num_roots() {
                if rs.root_index(&rs.reflect(m, rs.root(i))).is_none() {
                    closure_ok = false;
                }
            }
        }
    }
    h.check("reflection closure on all nine computable systems", closure_ok);

    // appendix consistency: dim Phi + rank = dim G/K
    let mut dims_ok = true;
    for space in catalog::list_spaces() {
        if let Ok(rs) = space.build_restricted() {
            dims_ok &= rs.dim() + space.rank as u64 == space.dim_gk;
        }
    }
    h.check("dimension bookkeeping against the space table", dims_ok);

    // group order anchors
    let order_of = |f, r| weyl::group_order(&RootSystem::build(f, r).unwrap()).unwrap();
    h.check(
        "Weyl group orders (A2, G2, F4, E8)",
        order_of(Family::A, 2) == 6
            && order_of(Family::G, 2) == 12
            && order_of(Family::F, 4) == 1152
            && order_of(Family::E, 8) == 696_729_600,
    );

    // corank-one classes of EVII's C3
    {
        let rs = RootSystem::build(Family::C, 3).unwrap();
        let session = Session::new(&rs);
        let labels: Vec<String> = session
            .catalog()
            .unwrap()
            .corank_one()
            .iter()
            .map(|c| c.label.clone())
            .collect();
        h.check(
            "corank-one classes of C3 are A1xC1, A2, C2",
            labels == ["A1xC1", "A2", "C2"],
        );
    }

    // the two decision routes agree on E6
    {
        let rs = RootSystem::build(Family::E, 6).unwrap();
        let session = Session::new(&rs);
        let catalog = session.catalog().unwrap();
        let mut agree = true;
        for class in &catalog.classes {
            for m in 2..=3 {
                let a = criteria::wright_power(&session, &class.rep, m).unwrap().holds;
                let b = criteria::wright_reduced(&session, &class.rep, m).unwrap().holds;
                agree &= a == b;
            }
        }
        h.check("weighted and reduced routes agree on E6", agree);
    }

    // classification of the small spaces
    {
        let opts = ClassifyOptions::default();
        let mut ok = true;
        for label in ["EIII", "EIV", "EVII", "FII", "G"] {
            let report = classify_space(label, &opts).unwrap();
            ok &= report.records.iter().all(|r| {
                matches!(r.status, Status::ExactMatch | Status::ContainsPaper)
            });
            ok &= report.lg.verified == Some(true);
        }
        h.check("small-space classification matches the reference", ok);
    }

    if h.failures == 0 {
        println!("selftest: all checks passed");
        0
    } else {
        println!("selftest: {} check(s) FAILED", h.failures);
        1
    }
}
