use spectable_core::groups::Catalog;

fn main() {
    let cat = Catalog::embedded();
    println!("loaded groups: {:?}", cat.names());
    for (name, msg) in cat.failures() {
        println!("FAIL {name}: {msg}");
    }
    for g in cat.iter() {
        println!(
            "ok {} order={} classes={} irreps={} reps={:?}",
            g.name,
            g.group.order(),
            g.group.classes().len(),
            g.table.irreps().len(),
            g.rep_names()
        );
    }
}
