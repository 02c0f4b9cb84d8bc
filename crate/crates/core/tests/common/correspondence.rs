use heunblock::algebra::ExecPolicy;
use heunblock::correspondence::{
    classical_chain_check, conjecture_b_first_kind, conjecture_b_regular, conjecture_b_typed, conjecture_b_typeg,
    typed_routes_agree, ClassicalLink,
};
use heunblock::virasoro::FirstKind;

pub fn regular_accessory_parameter_is_log_derivative() {
    let r = conjecture_b_regular(3, ExecPolicy::default()).unwrap();
    assert!(r.passed(), "{:?}", r);
}

pub fn first_kind_accessory_parameters_are_log_derivatives() {
    for nf in FirstKind::ALL {
        let r = conjecture_b_first_kind(nf, 3, ExecPolicy::default()).unwrap();
        assert!(r.passed(), "{:?} {:?}", nf, r);
    }
}

pub fn classical_limit_commutes_with_confluence() {
    for link in ClassicalLink::ALL {
        let r = classical_chain_check(link, 3, ExecPolicy::default()).unwrap();
        assert!(r.passed(), "{} {:?}", link.tag(), r);
    }
}

pub fn typed_routes_agree_through_second_order() {
    let r = typed_routes_agree(2, ExecPolicy::default()).unwrap();
    assert!(r.passed(), "{:?}", r);
}

pub fn confluent_bs_parameter_is_typed_log_derivative() {
    let r = conjecture_b_typed(3, ExecPolicy::default()).unwrap();
    assert!(r.passed(), "{:?}", r);
    assert_eq!(r.orders.len(), 5);
}

pub fn biconfluent_bs_parameter_is_typeg_derivative() {
    let r = conjecture_b_typeg(5, ExecPolicy::default()).unwrap();
    assert!(r.passed(), "{:?}", r);
    assert!(!conjecture_b_typeg(6, ExecPolicy::default()).unwrap().passed());
}
