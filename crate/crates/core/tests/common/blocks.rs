use heunblock::algebra::{ExecPolicy, RationalFunction};
use heunblock::virasoro::{regular_block, regular_space};

const F1: &str = "(Deltasigma-Delta0+Deltat)*(Deltasigma-Deltainf+Delta1)/(2*Deltasigma)";
const F2: &str = "(Deltasigma-Delta0+Deltat)*(Deltasigma-Delta0+Deltat+1)*(Deltasigma-Deltainf+Delta1)*(Deltasigma-Deltainf+Delta1+1)/(4*Deltasigma*(1+2*Deltasigma)) \
    + (1+2*Deltasigma)*(Delta0+Deltat+(Deltasigma*(Deltasigma-1)-3*(Delta0-Deltat)^2)/(1+2*Deltasigma))*(Deltainf+Delta1+(Deltasigma*(Deltasigma-1)-3*(Deltainf-Delta1)^2)/(1+2*Deltasigma)) \
    / (2*(1-4*Deltasigma)^2+2*(c-1)*(1+2*Deltasigma))";

pub fn regular_block_matches_published_low_orders() {
    let b = regular_block(2, ExecPolicy::Sequential).unwrap();
    let s = regular_space();
    assert_eq!(b.coefficient(1), RationalFunction::parse(F1, &s).unwrap());
    assert_eq!(b.coefficient(2), RationalFunction::parse(F2, &s).unwrap());
    assert_eq!(b.prefactor_exponent(), RationalFunction::parse("Deltasigma-Delta0-Deltat", &s).unwrap());
}
