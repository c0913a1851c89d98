use maxinv::action::invariant_subgroups;
use maxinv::catalog::{curated_fixtures, paper_fixtures, Fingerprint};
use maxinv::format::{parse_action_file, parse_group_file, write_action_file, write_group_file};
use maxinv::group::{closure_from_generators, DEFAULT_CAP};
use maxinv::lattice::all_subgroups;
use maxinv::Permutation;

#[test]
fn group_file_matches_closure() {
    let g = parse_group_file("points: 3\ngen: (0 1)\ngen: (0 1 2)\n", DEFAULT_CAP).unwrap();
    let gens = [
        Permutation::from_cycles(3, &[vec![0, 1]]).unwrap(),
        Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
    ];
    let h = closure_from_generators(&gens, DEFAULT_CAP).unwrap();
    assert_eq!(g.order(), 6);
    for x in g.elements() {
        for y in g.elements() {
            assert_eq!(g.mul(x, y), h.mul(x, y));
        }
    }
}

#[test]
fn fixtures_round_trip_through_files() {
    let mut all = paper_fixtures().unwrap();
    all.extend(curated_fixtures().unwrap());
    for f in all.iter().filter(|f| f.group.order() <= 60) {
        let text = write_group_file(&f.group);
        let g = parse_group_file(&text, DEFAULT_CAP).unwrap();
        let before = all_subgroups(&f.group, DEFAULT_CAP).unwrap();
        let after = all_subgroups(&g, DEFAULT_CAP).unwrap();
        assert_eq!(Fingerprint::of(&f.group, &before), Fingerprint::of(&g, &after), "{}", f.name);
        for a in f.actions.iter().skip(1) {
            let parsed = parse_action_file(&g, &write_action_file(&f.group, &a.action), DEFAULT_CAP).unwrap();
            assert_eq!(parsed.order(), a.action.order(), "{} {}", f.name, a.name);
            assert_eq!(
                invariant_subgroups(&after, &parsed).len(),
                invariant_subgroups(&before, &a.action).len(),
                "{} {}",
                f.name,
                a.name
            );
        }
    }
}
