use std::sync::OnceLock;

use lrcommutor::commutor::{rho1_internal, rho1_switching};
use lrcommutor::format::{
    pair_from_text, pair_to_text, parse_tableau, tableau_from_text, tableau_to_text, to_json,
};
use lrcommutor::insertion::{inner_corners, internal_insert};
use lrcommutor::knuth::{elementary_moves, knuth_equivalent, rectify_word, rsk};
use lrcommutor::tableau::enumerate_ssyt;
use lrcommutor::verify::lr_pairs;
use lrcommutor::{GluedPair, SkewShape, SkewTableau, Word};
use proptest::prelude::*;
use proptest::sample::select;

fn tableaux() -> &'static Vec<SkewTableau> {
    static ALL: OnceLock<Vec<SkewTableau>> = OnceLock::new();
    ALL.get_or_init(|| {
        SkewShape::all_up_to(6)
            .iter()
            .flat_map(|s| enumerate_ssyt(s, 4))
            .collect()
    })
}

fn pairs() -> &'static Vec<GluedPair> {
    static ALL: OnceLock<Vec<GluedPair>> = OnceLock::new();
    ALL.get_or_init(|| lr_pairs(7))
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(1u32..=4, 0..9).prop_map(Word::from)
}

proptest! {
    #[test]
    fn standardize_is_idempotent(t in select(tableaux().as_slice())) {
        let s = t.standardize();
        prop_assert!(s.is_standard());
        prop_assert_eq!(s.standardize(), s.clone());
        prop_assert_eq!(s.shape(), t.shape());
    }

    #[test]
    fn internal_insert_keeps_knuth_class(t in select(tableaux().as_slice()), k in 0usize..8) {
        let rows = inner_corners(&t);
        let i = rows[k % rows.len()];
        let (t2, trace) = internal_insert(&t, i).unwrap();
        prop_assert!(knuth_equivalent(&t.reading_word(), &t2.reading_word()));
        prop_assert_eq!(t2.size(), t.size());
        prop_assert_eq!(t2.inner().size(), t.inner().size() + 1);
        prop_assert_eq!(trace.created.row >= i, true);
    }

    #[test]
    fn elementary_moves_stay_in_class(w in word()) {
        let r = rectify_word(&w);
        for v in elementary_moves(&w) {
            prop_assert_eq!(rectify_word(&v), r.clone());
        }
    }

    #[test]
    fn rsk_p_is_rectification(w in word()) {
        let pq = rsk(&w);
        prop_assert_eq!(pq.p.rows().to_vec(), rectify_word(&w));
        prop_assert_eq!(pq.p.shape(), pq.q.shape());
        prop_assert!(pq.q.is_standard());
    }

    #[test]
    fn word_text_round_trip(w in word()) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn tableau_formats_round_trip(t in select(tableaux().as_slice())) {
        prop_assert_eq!(tableau_from_text(&tableau_to_text(&t)).unwrap(), t.clone());
        let j = to_json(&t);
        prop_assert_eq!(to_json(&parse_tableau(&j).unwrap()), j);
    }

    #[test]
    fn rho1_swaps_inner_and_content(p in select(pairs().as_slice())) {
        let q = rho1_switching(&p).unwrap();
        prop_assert_eq!(q.lambda().trimmed(), p.lambda().trimmed());
        prop_assert_eq!(q.mu().trimmed(), p.nu().unwrap().trimmed());
        prop_assert_eq!(q.nu().unwrap().trimmed(), p.mu().trimmed());
        prop_assert!(q.is_lr());
        prop_assert_eq!(rho1_internal(&p).unwrap(), q.clone());
        prop_assert_eq!(pair_from_text(&pair_to_text(&q)).unwrap(), q);
    }
}
