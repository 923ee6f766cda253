use std::ffi::{CStr, CString};
use std::ptr;

use treedim_ffi::*;

fn parse(text: &str) -> *mut TdTree {
    let text = CString::new(text).unwrap();
    let mut tree = ptr::null_mut();
    assert_eq!(
        unsafe { td_tree_parse(text.as_ptr(), &mut tree) },
        TdStatus::Ok
    );
    tree
}

fn last_error() -> String {
    let p = td_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn embed_star_and_verify() {
    let tree = parse("0 1\n0 2\n0 3\n0 4\n0 5\n");
    unsafe {
        assert_eq!(td_tree_vertex_count(tree), 6);
        assert_eq!(td_tree_leaf_count(tree), 5);
        assert_eq!(td_tree_lattice_dimension(tree), 3);

        let mut emb = ptr::null_mut();
        assert_eq!(td_embed_tree(tree, &mut emb), TdStatus::Ok);
        assert_eq!(td_embedding_dimension(emb), 3);

        let (mut passed, mut pairs) = (false, 0u64);
        assert_eq!(
            td_verify_isometric(tree, emb, &mut passed, &mut pairs),
            TdStatus::Ok
        );
        assert!(passed);
        assert_eq!(pairs, 15);

        let mut center = [9i64; 3];
        assert_eq!(
            td_embedding_coords(emb, 0, center.as_mut_ptr(), 3),
            TdStatus::Ok
        );
        assert_eq!(center, [0, 0, 0]);

        td_embedding_free(emb);
        td_tree_free(tree);
    }
}

#[test]
fn normalized_json_matches_core() {
    let tree = parse("0 1\n0 2\n0 3\n0 4\n");
    unsafe {
        let mut raw = ptr::null_mut();
        let mut emb = ptr::null_mut();
        assert_eq!(td_embed_tree(tree, &mut raw), TdStatus::Ok);
        assert_eq!(td_embedding_normalize(raw, &mut emb), TdStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(td_embedding_to_json(emb, &mut json), TdStatus::Ok);
        let got = CStr::from_ptr(json).to_str().unwrap().to_owned();

        let core = treedim::embed_tree(&"0 1\n0 2\n0 3\n0 4\n".parse().unwrap())
            .unwrap()
            .normalize()
            .to_json();
        assert_eq!(got, core);

        td_string_free(json);
        td_embedding_free(emb);
        td_embedding_free(raw);
        td_tree_free(tree);
    }
}

#[test]
fn parse_errors_set_message() {
    let text = CString::new("0 1\n1 2\n2 0\n").unwrap();
    let mut tree = ptr::null_mut();
    let status = unsafe { td_tree_parse(text.as_ptr(), &mut tree) };
    assert_eq!(status, TdStatus::Parse);
    assert!(tree.is_null());
    assert!(last_error().contains("cycle"), "{}", last_error());
}

#[test]
fn null_arguments_are_rejected() {
    let mut tree = ptr::null_mut();
    unsafe {
        assert_eq!(td_tree_parse(ptr::null(), &mut tree), TdStatus::NullPointer);
        assert_eq!(
            td_embed_tree(ptr::null(), ptr::null_mut()),
            TdStatus::NullPointer
        );
        assert_eq!(td_tree_vertex_count(ptr::null()), 0);
        td_tree_free(ptr::null_mut());
        td_embedding_free(ptr::null_mut());
        td_string_free(ptr::null_mut());
    }
}

#[test]
fn coords_buffer_and_vertex_checks() {
    let tree = parse("0 1\n0 2\n0 3\n");
    unsafe {
        let mut emb = ptr::null_mut();
        assert_eq!(td_embed_tree(tree, &mut emb), TdStatus::Ok);
        let mut buf = [0i64; 1];
        assert_eq!(
            td_embedding_coords(emb, 1, buf.as_mut_ptr(), 1),
            TdStatus::BufferTooSmall
        );
        let mut buf = [0i64; 2];
        assert_eq!(
            td_embedding_coords(emb, 42, buf.as_mut_ptr(), 2),
            TdStatus::UnknownVertex
        );
        td_embedding_free(emb);
        td_tree_free(tree);
    }
}

#[test]
fn mismatched_tree_and_embedding() {
    let a = parse("0 1\n0 2\n0 3\n");
    let b = parse("5 6\n");
    unsafe {
        let mut emb = ptr::null_mut();
        assert_eq!(td_embed_tree(a, &mut emb), TdStatus::Ok);
        let mut passed = true;
        let status = td_verify_isometric(b, emb, &mut passed, ptr::null_mut());
        assert_eq!(status, TdStatus::Mismatch);
        td_embedding_free(emb);
        td_tree_free(a);
        td_tree_free(b);
    }
}

#[test]
fn brute_force_and_random() {
    unsafe {
        let mut tree = ptr::null_mut();
        assert_eq!(td_tree_random(8, 7, &mut tree), TdStatus::Ok);
        let mut d = 0usize;
        assert_eq!(td_brute_force_min_dimension(tree, 8, &mut d), TdStatus::Ok);
        assert_eq!(d, td_tree_lattice_dimension(tree));
        if d > 1 {
            assert_eq!(
                td_brute_force_min_dimension(tree, d - 1, &mut d),
                TdStatus::NotFound
            );
        }
        td_tree_free(tree);

        assert_eq!(td_tree_random(50, 7, &mut tree), TdStatus::Ok);
        assert_eq!(
            td_brute_force_min_dimension(tree, 25, &mut d),
            TdStatus::TooLarge
        );
        td_tree_free(tree);

        assert_eq!(td_tree_random(0, 7, &mut tree), TdStatus::InvalidArgument);
    }
}

#[test]
fn status_names_are_static() {
    let name = unsafe { CStr::from_ptr(td_status_name(TdStatus::BufferTooSmall)) };
    assert_eq!(name.to_str().unwrap(), "buffer too small");
}
