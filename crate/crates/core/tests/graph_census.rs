mod common;

#[test]
fn isomorphism_class_counts() {
    // number of graphs on n unlabeled vertices
    let known = [1, 2, 4, 11, 34, 156, 1044, 12346];
    for (i, want) in known.iter().enumerate() {
        assert_eq!(common::all_graphs(i + 1).len(), *want, "n = {}", i + 1);
    }
}
