use qhopf_core::galois::{
    check_connection_properties, galois_witness, lifted_can, partition_identity, strong_connection, strong_connection_closed,
};
use qhopf_core::hopf::CotensorElement;
use qhopf_core::AlgElement;

#[test]
fn recursion_equals_closed_form() {
    for n in 1..=8u32 {
        let k = i64::from(n);
        assert_eq!(strong_connection(k), strong_connection_closed(n, true), "k = {k}");
        assert_eq!(strong_connection(-k), strong_connection_closed(n, false), "k = -{k}");
    }
}

#[test]
fn partition_identities() {
    for n in 0..=8 {
        assert_eq!(partition_identity(n, true), AlgElement::one());
        assert_eq!(partition_identity(n, false), AlgElement::one());
    }
}

#[test]
fn legs_have_opposite_windings() {
    for k in -6..=6i64 {
        for ((s, t), _) in strong_connection(k).terms() {
            assert_eq!(t.winding(), k);
            assert_eq!(s.winding() + t.winding(), 0);
        }
    }
}

#[test]
fn connection_identities_up_to_eight() {
    let report = check_connection_properties(8);
    assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    assert_eq!(report.checks.len(), 17 * 5 - 1);
}

#[test]
fn witnesses() {
    for k in -6..=6 {
        assert_eq!(lifted_can(&galois_witness(k)), CotensorElement::simple(&AlgElement::one(), k));
    }
}
