use ccl_core::sequence::{
    all_sequences, apply_operation, classify, closed_form_f, reduce, value_f, Operation,
};
use num_traits::ToPrimitive;

#[test]
fn every_step_matches_its_closed_form_delta() {
    let mut steps = 0usize;
    for seq in all_sequences(18) {
        let mut current = seq.clone();
        while let Some(step) = apply_operation(&current) {
            let k = step.before.counts();
            let (old, new) = (value_f(&step.before), value_f(&step.after));
            assert_eq!(step.f_before, old.f);
            assert_eq!(step.f_after, new.f);
            assert!(step.delta_f() >= 0, "{:?} -> {:?}", step.before, step.after);
            match step.op {
                Operation::MergeOnes => {
                    assert_eq!(new.s1 - old.s1, 0);
                    assert_eq!(new.s2 - old.s2, k.b);
                    assert_eq!(new.s3 - old.s3, k.b * (k.p - k.c - 2));
                }
                Operation::AbsorbOne => assert_eq!(step.delta_f(), k.c * (k.c - k.b)),
                Operation::SplitTwos => assert_eq!(step.delta_f(), k.c * (k.c - k.b - 1)),
            }
            assert_eq!(step.after.counts().m, k.m);
            current = step.after;
            steps += 1;
        }
    }
    assert!(steps > 1000);
}

#[test]
fn reductions_end_at_the_closed_form_value() {
    for seq in all_sequences(18) {
        let trace = reduce(&seq);
        let last = &trace.final_sequence;
        assert_eq!(classify(last), Some(trace.final_type));
        let k = last.counts();
        let closed = closed_form_f(trace.final_type, k.m, k.p).unwrap();
        assert!(closed.is_integer());
        assert_eq!(
            closed.to_integer().to_i64(),
            Some(value_f(last).f),
            "{seq:?}"
        );
        // the value never decreases along a reduction
        assert!(value_f(&seq).f <= value_f(last).f);
        let q = trace.q() as i64;
        assert!(4 * q >= k.m && q <= seq.len() as i64);
    }
}
