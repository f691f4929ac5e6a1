use rayon::prelude::*;
use specht::specht_module::conm5_check;

#[test]
fn kernel_comparison_holds_up_to_eight() {
    let cases: Vec<(usize, usize)> = (2..=8).flat_map(|n| (1..=n / 2).map(move |h| (n, h))).collect();
    cases.into_par_iter().for_each(|(n, h)| {
        let r = conm5_check(n, h).unwrap();
        assert!(r.holds, "n={n} h={h}: {r:?}");
    });
}
