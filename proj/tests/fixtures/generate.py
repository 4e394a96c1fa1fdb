#!/usr/bin/env python3
"""Writes the test fixture tree. Output is deterministic; rerun after edits."""
import pathlib
import random
import shutil

ROOT = pathlib.Path(__file__).resolve().parent
RB = "https://w3id.org/rbkit/vocab/1.0#"
BASE = "https://w3id.org/rbkit"
PREFIXES = f"""@prefix rb: <{RB}> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
"""
ORCIDS = ["0000-0002-1825-0097", "0000-0001-5109-3700", "0000-0002-1694-233X"]


def write(rel, text):
    path = ROOT / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def dataset_ttl(ident, *, license="https://creativecommons.org/licenses/by/4.0/",
                creators=(("Ada Example", ORCIDS[0]),), count=20, use_case=True,
                element_type="Triples"):
    lines = [PREFIXES, f"<{BASE}/datasets/{ident}> a rb:Dataset ;",
             f'  rb:identifier "{ident}" ;',
             f'  rb:title "Stream fixture {ident}" ;',
             '  rb:description "Synthetic sensor observations, one small graph per element." ;',
             f"  rb:license <{license}> ;"]
    for name, orcid in creators:
        parts = []
        if name:
            parts.append(f'rb:name "{name}"')
        if orcid:
            parts.append(f"rb:orcid <https://orcid.org/{orcid}>")
        lines.append(f"  rb:creator [ a rb:Agent ; {' ; '.join(parts)} ] ;")
    if use_case:
        lines.append('  rb:useCase "Benchmarking RDF stream compression on small graphs." ;')
    lines.append(f"  rb:streamElementType rb:{element_type} ;")
    lines.append(f"  rb:elementCount {count} .")
    return "\n".join(lines) + "\n"


def stream_elements(rel, n, seed):
    rng = random.Random(seed)
    for i in range(n):
        out = ["@prefix ex: <http://example.org/sensor#> .",
               "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .", ""]
        for k in range(rng.randint(1, 5)):
            kind = rng.randrange(4)
            subj = f"ex:obs{i}" if rng.random() < 0.7 else "_:n0"
            if kind == 0:
                obj = f'"{rng.randint(-40, 40)}"^^xsd:integer'
            elif kind == 1:
                obj = f'"reading {i}.{k}"@en'
            elif kind == 2:
                obj = f"ex:station{rng.randint(0, 3)}"
            else:
                obj = f'"{rng.random():.3f}"^^xsd:decimal'
            out.append(f"{subj} ex:p{k} {obj} .")
        write(f"{rel}/{i:04d}.ttl", "\n".join(out) + "\n")


TASKS = [
    ("stream-compression", "Stream compression", ["flat-triples"]),
    ("stream-throughput", "Stream serialization throughput", ["flat-triples"]),
    ("flat-parsing", "Flat file parsing", []),
    ("flat-serialization", "Flat file serialization", []),
    ("grpc-latency", "Streaming latency over gRPC", ["stream-mixed"]),
    ("kafka-throughput", "Kafka end-to-end throughput", ["stream-mixed"]),
    ("reasoning-load", "Incremental reasoning load", []),
    ("query-latency", "Continuous query latency", ["stream-mixed"]),
    ("rdf-patch", "RDF patch application", []),
]


def task_ttl(ident, name, profiles):
    lines = [PREFIXES, f"<{BASE}/tasks/{ident}> a rb:Task ;",
             f'  rb:identifier "{ident}" ;', f'  rb:name "{name}" ;',
             f'  rb:description "{name} measured over every dataset in the required profiles." ;']
    for p in profiles:
        lines.append(f"  rb:requiredProfile <{BASE}/profiles/{p}> ;")
    lines.append('  rb:metric [ a rb:Metric ; rb:name "time" ; rb:unit "ms" ; rb:direction rb:LowerBetter ] ,')
    lines.append('    [ a rb:Metric ; rb:name "ratio" ; rb:direction rb:HigherBetter ] .')
    return "\n".join(lines) + "\n"


PROFILES = {
    "flat-triples": ('Triples only', "[ a rb:Constraint ; rb:constraintKind rb:ElementTypeIs ; rb:constraintValue rb:Triples ]"),
    "stream-mixed": ('Any stream, at least 10 elements', "[ a rb:Constraint ; rb:constraintKind rb:MinElementCount ; rb:constraintValue 10 ]"),
}


def profile_ttl(ident, name, constraint):
    return (PREFIXES + f"<{BASE}/profiles/{ident}> a rb:Profile ;\n"
            f'  rb:identifier "{ident}" ;\n  rb:name "{name}" ;\n  rb:constraint {constraint} .\n')


REPORTS = [
    # (file, task, profile, date, systems, orcid)
    ("r01", "stream-compression", "flat-triples", "2024-03-01", [("jelly", "1.0.0")], 0),
    ("r02", "stream-compression", "flat-triples", "2024-05-20", [("jelly", "1.1.0"), ("protobuf", "3.25")], 1),
    ("r03", "stream-throughput", "flat-triples", "2024-04-11", [("rdf4j", "4.3.8")], 2),
    ("r04", "flat-parsing", "flat-triples", "2024-06-02", [("jena", "5.0.0")], 0),
    ("r05", "flat-parsing", "flat-triples", "2023-12-24", [("jena", "4.10.0")], 1),
    ("r06", "grpc-latency", "stream-mixed", "2024-02-14", [("jelly-grpc", "1.0.0")], 2),
    ("r07", "kafka-throughput", "stream-mixed", "2024-01-09", [("jelly", "1.0.0"), ("kafka", "3.6.1")], 0),
    ("r08", "stream-compression", "flat-triples", "2024-05-20", [("zstd", "1.5.5")], 2),
]


def report_trig(name, task, profile, date, systems, orcid, *, drop=None):
    np = f"{BASE}/np/{name}"
    author = f"https://orcid.org/{ORCIDS[orcid]}"
    items = " ".join(f'[ a rb:EvaluatedSystem ; rb:systemName "{s}" ; rb:systemVersion "{v}" ]'
                     for s, v in systems)
    head = (f"<{np}/Head> {{\n  <{np}> a np:Nanopublication ;\n    np:hasAssertion <{np}/assertion> ;\n"
            f"    np:hasProvenance <{np}/provenance> ;\n    np:hasPublicationInfo <{np}/pubinfo> .\n}}\n")
    assertion = (f"<{np}/assertion> {{\n  <{np}> a rb:BenchmarkRunReport ;\n"
                 f"    rb:task <{BASE}/tasks/{task}> ;\n    rb:profile <{BASE}/profiles/{profile}> ;\n"
                 f'    rb:profileVersion "1.0.0" ;\n'
                 f"    rb:benchmarkCode <https://github.com/example/bench/tree/v1.0.0> ;\n"
                 f"    rb:resultsLink <https://example.org/results/{name}> ;\n"
                 f"    rb:evaluatedSystems ( {items} ) .\n}}\n")
    if drop == "assertion":
        assertion = f"<{np}/assertion> {{\n}}\n"
    provenance = f"<{np}/provenance> {{\n  <{np}/assertion> prov:wasAttributedTo <{author}> .\n}}\n"
    pubinfo = (f'<{np}/pubinfo> {{\n  <{np}> dct:creator <{author}> ;\n'
               f'    dct:created "{date}"^^xsd:date .\n}}\n')
    parts = [head, assertion, pubinfo] if drop == "provenance" else [head, assertion, provenance, pubinfo]
    prefixes = ("@prefix np: <http://www.nanopub.org/nschema#> .\n@prefix dct: <http://purl.org/dc/terms/> .\n"
                "@prefix prov: <http://www.w3.org/ns/prov#> .\n" + PREFIXES + "\n")
    return prefixes + "\n".join(parts)


def main():
    for sub in ("stream20", "catalog", "index", "curator", "config"):
        shutil.rmtree(ROOT / sub, ignore_errors=True)

    write("stream20/metadata.ttl", dataset_ttl("stream20"))
    stream_elements("stream20/data", 20, seed=20)

    for ident, name, profiles in TASKS:
        write(f"catalog/tasks/{ident}/metadata.ttl", task_ttl(ident, name, profiles))
    for ident, (name, constraint) in PROFILES.items():
        write(f"catalog/profiles/{ident}/metadata.ttl", profile_ttl(ident, name, constraint))
    write("catalog/datasets/sensor-small/metadata.ttl", dataset_ttl("sensor-small", count=12))

    for row in REPORTS:
        write(f"index/{row[0]}.trig", report_trig(*row))
    write("index/r09.trig", report_trig("r09", "rdf-patch", "flat-triples", "2024-07-01",
                                        [("jena", "5.0.0")], 0, drop="provenance"))
    write("index/r10.trig", report_trig("r10", "query-latency", "stream-mixed", "2024-07-02",
                                        [("rsp", "2.0")], 1, drop="assertion"))

    write("curator/compliant/metadata.ttl", dataset_ttl("compliant", count=1500))
    write("curator/license/metadata.ttl",
          dataset_ttl("license", count=1500, license="https://example.org/proprietary-license"))
    write("curator/authorship/metadata.ttl", dataset_ttl("authorship", count=1500, creators=()))
    write("curator/size/metadata.ttl", dataset_ttl("size", count=999))
    write("curator/usecase/metadata.ttl", dataset_ttl("usecase", count=1500, use_case=False))

    write("config/rbkit.toml",
          "min_element_count = 10\ncap_ladder = [10]\nformats = [\"nquads\"]\n"
          "source_repo_base = \"https://github.com/example/registry\"\n")


if __name__ == "__main__":
    main()
