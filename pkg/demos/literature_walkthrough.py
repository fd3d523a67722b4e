"""Walk through cross-filtering on the reviewed-papers app.

Run from the repository root:

    python3 demos/literature_walkthrough.py
"""

from pathlib import Path

from crossmap import Range, Term, ValueSet, build_app, load_config, term_counts

APPS = Path(__file__).resolve().parents[1] / "apps"


def counter(engine) -> str:
    selected, total = engine.visible_count()
    return f"{selected} selected out of {total} records"


def main() -> None:
    app = build_app(load_config(APPS / "literature.yaml"))
    engine = app.engine
    print(f"== {app.config.title} ==")
    print(counter(engine))

    print("\nPapers per year (every chart sees every other chart's filters):")
    for b in engine.histogram("year").bins:
        print(f"  {int(b.lo)}  {'#' * int(b.value)}  {int(b.value)}")

    print("\nNarrow to 2020-2021 ...")
    engine.set_filter("year", Range(2020, 2022))
    print(counter(engine))

    print("\nTop countries among those papers:")
    for b in engine.top_k("country", 5).bins:
        print(f"  {b.key:20s} {int(b.value)}")

    print("\nAdd a keyword-cloud term filter on 'detection' ...")
    engine.set_filter("topics", Term("detection"))
    print(counter(engine))
    print("Top terms (the cloud ignores its own filter, so 'detection' stays):")
    for t in term_counts(engine, 8):
        print(f"  {t.term:20s} {t.frequency}")

    print("\nRestrict to United States, then export the visible subset:")
    engine.set_filter("country", ValueSet({"United States"}))
    print(counter(engine))
    rows = engine.export_records().decode().count("\r\n") - 1
    print(f"export_records() -> CSV with {rows} data rows")

    engine.clear_all()
    print(f"\nReset All -> {counter(engine)}")


if __name__ == "__main__":
    main()
