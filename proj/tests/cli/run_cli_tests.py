#!/usr/bin/env python3
"""End-to-end checks for the thickness-lab command-line tool.

Usage: run_cli_tests.py /path/to/thickness-lab

Each check invokes the binary as a subprocess and asserts on exit codes,
stdout/stderr text, and emitted documents. Exit codes under test:
0 success/valid, 1 invalid/exhausted, 2 inconclusive/budget, 64 usage.
"""

import json
import os
import subprocess
import sys
import tempfile

BINARY = None
CHECKS = 0


def run(*args, stdin=None, env_extra=None):
    env = os.environ.copy()
    env.pop("THICKNESS_LAB_BUDGET_SECONDS", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [BINARY, *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=300,
        env=env,
    )
    return proc.returncode, proc.stdout, proc.stderr


def check(condition, label, context=""):
    global CHECKS
    CHECKS += 1
    if not condition:
        print(f"FAIL: {label}\n{context}", file=sys.stderr)
        sys.exit(1)


def graph_doc(vertices, edges):
    return json.dumps(
        {
            "format_version": "1",
            "host": {
                "vertices": vertices,
                "edges": [sorted(e) for e in edges],
            },
        }
    )


def decomposition_doc(vertices, edges, pages, **extra):
    doc = {
        "format_version": "1",
        "host": {"vertices": vertices, "edges": [sorted(e) for e in edges]},
        "pages": [[sorted(e) for e in page] for page in pages],
    }
    doc.update(extra)
    return json.dumps(doc)


def all_pairs(vertices):
    return [
        [a, b] for i, a in enumerate(vertices) for b in vertices[i + 1 :]
    ]


def test_product(tmp):
    code, out, err = run("product", "-n", "5", "-m", "2")
    doc = json.loads(out)
    check(code == 0, "product 5x2 exits 0", err)
    check(len(doc["host"]["vertices"]) == 10, "product 5x2 has 10 vertices")
    check(len(doc["host"]["edges"]) == 25, "product 5x2 has 25 edges")
    check(doc["format_version"] == "1", "product document declares its format")
    check(doc["metadata"]["n"] == 5 and doc["metadata"]["m"] == 2,
          "product metadata records the parameters")

    code, out, _ = run("product", "-n", "2", "-m", "2")
    doc = json.loads(out)
    degree = {}
    for a, b in doc["host"]["edges"]:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    check(code == 0 and len(doc["host"]["vertices"]) == 4
          and len(doc["host"]["edges"]) == 4
          and all(d == 2 for d in degree.values()),
          "product 2x2 is a 4-cycle")

    code, out, _ = run("product", "-n", "7", "-m", "3")
    doc = json.loads(out)
    check(code == 0 and len(doc["host"]["vertices"]) == 21
          and len(doc["host"]["edges"]) == 77,
          "product 7x3 has 21 vertices and 77 edges")

    out_file = os.path.join(tmp, "p52.json")
    code, out, _ = run("product", "-n", "5", "-m", "2", "-o", out_file)
    with open(out_file) as handle:
        code2, stdout_copy, _ = run("product", "-n", "5", "-m", "2")
        check(code == 0 and code2 == 0 and handle.read() == stdout_copy,
              "product -o writes the same bytes as stdout")

    code, _, _ = run("product", "-n", "0", "-m", "2")
    check(code == 64, "product rejects n < 1 as a usage error")
    code, _, _ = run("product", "-n", "5")
    check(code == 64, "product without -m is a usage error")


def test_bounds():
    code, out, _ = run("bounds", "-n", "7", "-m", "3")
    check(code == 0 and "thickness: 2 (exact;" in out, "bounds 7x3 is exactly 2", out)

    code, out, _ = run("bounds", "-n", "10", "-m", "2")
    check(code == 0 and "open, in [2, 3]" in out, "bounds 10x2 is the open bracket", out)

    code, out, _ = run("bounds", "-n", "9", "-m", "2")
    check(code == 0 and "thickness: 3 (exact;" in out, "bounds 9x2 is exactly 3", out)

    code, out, _ = run("bounds", "-n", "7", "-m", "3", "--json")
    doc = json.loads(out)
    check(code == 0 and doc["thickness"]["lo"] == 2 and doc["thickness"]["hi"] == 2
          and doc["thickness"]["exact"] is True and doc["product_lower_bound"] == 2
          and doc["containment_upper_bound"] == 3,
          "bounds 7x3 --json carries the full report", out)

    code, out, _ = run("bounds", "-n", "10", "-m", "2", "--json")
    doc = json.loads(out)
    check(code == 0 and doc["thickness"]["lo"] == 2 and doc["thickness"]["hi"] == 3
          and doc["thickness"]["exact"] is False and doc["thickness"]["provenance"],
          "bounds 10x2 --json reports the open interval", out)

    _, again, _ = run("bounds", "-n", "10", "-m", "2", "--json")
    check(out == again, "bounds --json output is byte-stable across runs")

    code, _, _ = run("bounds", "-n", "7")
    check(code == 64, "bounds without -m is a usage error")


def test_verify(tmp):
    triangle = decomposition_doc(
        ["a", "b", "c"], [["a", "b"], ["a", "c"], ["b", "c"]],
        [[["a", "b"], ["a", "c"], ["b", "c"]]])
    tri_file = os.path.join(tmp, "triangle.json")
    with open(tri_file, "w") as handle:
        handle.write(triangle)

    code, out, _ = run("verify", tri_file)
    check(code == 0 and "valid" in out and "partition: ok" in out
          and "coverage: ok" in out and "page 1: planar" in out,
          "verify accepts a one-page triangle", out)

    code, out, _ = run("verify", "-", stdin=triangle)
    check(code == 0 and "valid" in out, "verify reads documents from stdin")

    code, out, _ = run("verify", tri_file, "--json")
    doc = json.loads(out)
    check(code == 0 and doc["valid"] is True and doc["partition_ok"] is True
          and doc["coverage_ok"] is True and doc["pages_planar"] == [True]
          and doc["pairing_ok"] is None and doc["detail"] == "",
          "verify --json mirrors the text report", out)

    duplicated = decomposition_doc(
        ["a", "b", "c"], [["a", "b"], ["a", "c"], ["b", "c"]],
        [[["a", "b"], ["a", "b"], ["a", "c"], ["b", "c"]]])
    code, _, err = run("verify", "-", stdin=duplicated)
    check(code == 1 and "edge repeated on one page: a-b" in err,
          "verify names a duplicated page edge", err)

    uncovered = decomposition_doc(
        ["a", "b", "c"], [["a", "b"], ["a", "c"], ["b", "c"]],
        [[["a", "b"], ["a", "c"]]])
    code, out, _ = run("verify", "-", stdin=uncovered)
    check(code == 1 and "coverage: FAILED" in out
          and "invalid: edge on no page: b-c" in out,
          "verify names an uncovered edge", out)

    names = [f"a{i}" for i in range(1, 6)]
    k5_page = decomposition_doc(names, all_pairs(names), [all_pairs(names)])
    code, out, _ = run("verify", "-", stdin=k5_page)
    check(code == 1 and "page 1: NOT planar" in out and "kuratowski witness:" in out,
          "verify reports a non-planar page with a witness", out)

    code, out, _ = run("verify", "-", "--json", stdin=k5_page)
    doc = json.loads(out)
    check(code == 1 and doc["valid"] is False and doc["pages_planar"] == [False]
          and doc["witnesses"][0]["page"] == 1
          and len(doc["witnesses"][0]["kuratowski"]) == 10,
          "verify --json emits the witness edges", out)

    code, _, err = run("verify", os.path.join(tmp, "nosuch.json"))
    check(code == 1 and "error: cannot open" in err, "verify reports a missing file", err)

    code, _, err = run("verify", "-", stdin="{not json")
    check(code == 1 and "error:" in err, "verify rejects malformed JSON", err)

    stray = json.loads(triangle)
    stray["bogus"] = 1
    code, _, err = run("verify", "-", stdin=json.dumps(stray))
    check(code == 1 and "unknown key: bogus" in err,
          "verify rejects unknown document keys", err)


def test_search(tmp):
    k5_file = os.path.join(tmp, "k5.json")
    code, _, _ = run("product", "-n", "5", "-m", "1", "-o", k5_file)
    check(code == 0, "product can emit a complete graph via m=1")

    code, out, _ = run("search", "--graph", k5_file, "-k", "1")
    check(code == 1 and "exhausted: no 1-page decomposition" in out,
          "search proves the 5-clique needs two pages", out)

    names = [f"v{i}" for i in range(1, 10)]
    k9e = graph_doc(names, [e for e in all_pairs(names) if e != ["v1", "v2"]])
    k9e_file = os.path.join(tmp, "k9e.json")
    with open(k9e_file, "w") as handle:
        handle.write(k9e)
    cert_file = os.path.join(tmp, "k9e_cert.json")
    code, out, _ = run("search", "--graph", k9e_file, "-k", "2", "-o", cert_file)
    check(code == 0 and out.startswith("found: 2-page decomposition"),
          "search finds two pages for the near-complete 9-vertex host", out)
    code, out, _ = run("verify", cert_file)
    check(code == 0 and "valid" in out, "the emitted certificate verifies", out)
    cert = json.loads(open(cert_file).read())
    check(len(cert["host"]["vertices"]) == 9 and len(cert["host"]["edges"]) == 35
          and len(cert["pages"]) == 2, "the certificate covers the searched host")

    code, out, _ = run("search", "-n", "4", "-m", "2", "--exact")
    check(code == 0 and "thickness: 2 (exact;" in out,
          "exact search settles the 4x2 product at 2", out)

    exact_cert = os.path.join(tmp, "exact42.json")
    code, _, _ = run("search", "-n", "4", "-m", "2", "--exact", "-o", exact_cert)
    code2, out, _ = run("verify", exact_cert)
    check(code == 0 and code2 == 0 and "valid" in out,
          "exact search writes a verifiable certificate")

    code, out, _ = run("search", "-n", "6", "-m", "1", "-k", "2", "--max-nodes", "1")
    check(code == 2 and "inconclusive: budget exceeded" in out,
          "a starved node budget is inconclusive", out)

    pinned_file = os.path.join(tmp, "pinned.json")
    code, _, _ = run("search", "--graph", k5_file, "-k", "2",
                     "--pin", "v:1:1,v:1:2=1", "-o", pinned_file)
    pinned = json.loads(open(pinned_file).read())
    check(code == 0 and ["v:1:1", "v:1:2"] in pinned["pages"][0],
          "a pinned edge lands on its requested page")

    first = run("search", "--graph", k5_file, "-k", "2", "--deterministic",
                "-o", os.path.join(tmp, "det1.json"))
    second = run("search", "--graph", k5_file, "-k", "2", "--deterministic",
                 "-o", os.path.join(tmp, "det2.json"))
    check(first[0] == 0 and second[0] == 0
          and open(os.path.join(tmp, "det1.json")).read()
          == open(os.path.join(tmp, "det2.json")).read(),
          "deterministic searches emit identical certificates")

    code, _, err = run("search", "--graph", k5_file)
    check(code == 64 and "need -k PAGES or --exact" in err,
          "search without a goal is a usage error", err)
    code, _, err = run("search", "-k", "1")
    check(code == 64 and "need --graph FILE or both -n and -m" in err,
          "search without a host is a usage error", err)
    code, _, err = run("search", "--graph", k5_file, "-k", "2", "--pin", "a,b")
    check(code == 64, "a pin without a page is a usage error", err)
    code, _, err = run("search", "--graph", k5_file, "-k", "2", "--pin", "a,b=0")
    check(code == 64 and "1-based" in err, "pin pages are 1-based", err)
    code, _, err = run("search", "--graph", k5_file, "-k", "2", "--hub-symmetric", "v:1:1")
    check(code == 64, "hub-symmetric needs two labels", err)


def test_budget_env(tmp):
    k5_file = os.path.join(tmp, "k5.json")
    code, out, err = run("search", "--graph", k5_file, "-k", "2",
                         env_extra={"THICKNESS_LAB_BUDGET_SECONDS": "30"})
    check(code == 0 and "found" in out and "warning" not in err,
          "a valid budget env var is accepted silently", err)

    code, out, err = run("search", "--graph", k5_file, "-k", "2",
                         env_extra={"THICKNESS_LAB_BUDGET_SECONDS": "banana"})
    check(code == 0 and "found" in out
          and "ignoring invalid THICKNESS_LAB_BUDGET_SECONDS" in err,
          "an invalid budget env var warns and falls back", err)

    code, out, _ = run("search", "-n", "9", "-m", "2", "-k", "2",
                       env_extra={"THICKNESS_LAB_BUDGET_SECONDS": "0.0001"})
    check(code == 2 and "inconclusive" in out,
          "the env var budget actually limits the search", out)


def test_construct(tmp):
    prod_file = os.path.join(tmp, "c52.json")
    code, _, err = run("construct", "-n", "5", "-m", "2", "--search-bases",
                       "-o", prod_file)
    doc = json.loads(open(prod_file).read())
    check(code == 0 and len(doc["pages"]) == 2
          and doc["metadata"]["construction"] == "mirror_double"
          and doc["metadata"]["pages"] == 2,
          "construct 5x2 emits a two-page document", err)
    code, out, _ = run("verify", prod_file)
    check(code == 0 and "valid" in out, "the constructed 5x2 document verifies", out)

    code, out, err = run("construct", "-n", "1", "-m", "2")
    doc = json.loads(out)
    check(code == 0 and len(doc["host"]["vertices"]) == 2
          and len(doc["host"]["edges"]) == 1 and len(doc["pages"]) == 1,
          "construct 1x2 is a single-page single edge", err)
    code, out, _ = run("verify", "-", stdin=json.dumps(doc))
    check(code == 0 and "valid" in out, "construct output round-trips through verify")

    code, _, err = run("construct", "-n", "5", "-m", "2", "-k", "1")
    check(code == 1 and "construct failed" in err,
          "an impossible page target is exhausted", err)

    code, _, err = run("construct", "-n", "9", "-m", "2", "-k", "3", "--max-nodes", "1")
    check(code == 2 and "construct failed" in err,
          "a starved construct budget is inconclusive", err)


def test_construct_user_bases(tmp):
    k5_file = os.path.join(tmp, "k5.json")
    end_base = os.path.join(tmp, "k5_base.json")
    code, _, _ = run("search", "--graph", k5_file, "-k", "2", "-o", end_base)
    check(code == 0, "searching a 2-page base for the 5-clique succeeds")

    prod_file = os.path.join(tmp, "c42.json")
    code, _, err = run("construct", "-n", "4", "-m", "2",
                       "--end-base", end_base, "--end-hub", "v:1:5",
                       "-o", prod_file)
    doc = json.loads(open(prod_file).read())
    check(code == 0 and doc["metadata"]["construction"] == "chain_user_bases"
          and len(doc["host"]["vertices"]) == 8 and len(doc["host"]["edges"]) == 16
          and len(doc["pages"]) == 2,
          "user-supplied end base builds the 4x2 product", err)
    code, out, _ = run("verify", prod_file)
    check(code == 0 and "valid" in out, "the user-base 4x2 document verifies", out)

    end_doc = decomposition_doc(
        ["a", "b", "h"], [["a", "b"], ["a", "h"], ["b", "h"]],
        [[["a", "b"], ["a", "h"], ["b", "h"]]])
    mid_doc = decomposition_doc(
        ["p", "q", "x", "y"],
        [["p", "x"], ["p", "y"], ["q", "x"], ["q", "y"], ["x", "y"]],
        [[["p", "x"], ["p", "y"], ["q", "x"], ["q", "y"], ["x", "y"]]])
    end_file = os.path.join(tmp, "end24.json")
    mid_file = os.path.join(tmp, "mid24.json")
    with open(end_file, "w") as handle:
        handle.write(end_doc)
    with open(mid_file, "w") as handle:
        handle.write(mid_doc)

    long_file = os.path.join(tmp, "c24.json")
    code, _, err = run("construct", "-n", "2", "-m", "4",
                       "--end-base", end_file, "--end-hub", "h",
                       "--mid-base", mid_file, "--mid-hubs", "p,q",
                       "-o", long_file)
    doc = json.loads(open(long_file).read())
    check(code == 0 and len(doc["host"]["vertices"]) == 8
          and len(doc["host"]["edges"]) == 10 and len(doc["pages"]) == 1,
          "user bases chain into the 2x4 product", err)
    code, out, _ = run("verify", long_file)
    check(code == 0 and "valid" in out, "the chained 2x4 document verifies", out)

    code, _, err = run("construct", "-n", "4", "-m", "2", "--end-base", end_base)
    check(code == 64 and "--end-base requires --end-hub" in err,
          "an end base without its hub is a usage error", err)
    code, _, err = run("construct", "-n", "2", "-m", "4",
                       "--end-base", end_file, "--end-hub", "h")
    check(code == 64 and "requires --mid-base" in err,
          "long paths with user bases need a middle base", err)
    code, _, err = run("construct", "-n", "2", "-m", "4",
                       "--end-base", end_file, "--end-hub", "h",
                       "--mid-base", mid_file)
    check(code == 64 and "--mid-base requires --mid-hubs" in err,
          "a middle base without its hubs is a usage error", err)
    code, _, err = run("construct", "-n", "2", "-m", "4",
                       "--end-base", end_file, "--end-hub", "h",
                       "--mid-base", mid_file, "--mid-hubs", "pq")
    check(code == 64 and "two labels separated by a comma" in err,
          "mid hubs must be a comma-separated pair", err)


def test_export_dot(tmp):
    tri_file = os.path.join(tmp, "triangle.json")
    code, out, _ = run("export-dot", tri_file)
    check(code == 0 and "subgraph cluster_page_1" in out and 'label="page 1"' in out,
          "decomposition export uses one cluster per page", out)

    code, out, _ = run("export-dot", os.path.join(tmp, "c52.json"))
    check(code == 0 and "subgraph cluster_page_2" in out,
          "multi-page export emits every cluster", out)

    host_only = graph_doc(["a", "b", "c"], [["a", "b"], ["b", "c"]])
    code, out, _ = run("export-dot", "-", stdin=host_only)
    check(code == 0 and "subgraph" not in out and '"a" -- "b";' in out,
          "host-only export is a flat graph", out)

    padded = decomposition_doc(
        ["a", "b", "c"], [["a", "b"], ["a", "c"], ["b", "c"]],
        [[["a", "b"], ["a", "c"], ["b", "c"]], []])
    code, out, _ = run("export-dot", "-", stdin=padded)
    cluster2 = out.split("subgraph cluster_page_2")[1]
    check(code == 0 and '"p2|a"' in cluster2 and " -- " not in cluster2.split("}")[0],
          "an empty padding page renders vertices only", out)

    dot_file = os.path.join(tmp, "triangle.dot")
    code, _, _ = run("export-dot", tri_file, "-o", dot_file)
    check(code == 0 and "cluster_page_1" in open(dot_file).read(),
          "export-dot honours -o")

    code, _, err = run("export-dot", os.path.join(tmp, "nosuch.json"))
    check(code == 1 and "error: cannot open" in err,
          "export-dot reports a missing file", err)


def test_global_usage():
    code, _, _ = run()
    check(code == 64, "a bare invocation is a usage error")
    code, _, _ = run("frobnicate")
    check(code == 64, "an unknown subcommand is a usage error")
    code, out, _ = run("--help")
    check(code == 0 and "construct" in out and "verify" in out and "search" in out,
          "--help lists the subcommands and exits cleanly", out)


def main():
    global BINARY
    if len(sys.argv) != 2:
        print("usage: run_cli_tests.py /path/to/thickness-lab", file=sys.stderr)
        return 2
    BINARY = sys.argv[1]
    with tempfile.TemporaryDirectory() as tmp:
        test_product(tmp)
        test_bounds()
        test_verify(tmp)
        test_search(tmp)
        test_budget_env(tmp)
        test_construct(tmp)
        test_construct_user_bases(tmp)
        test_export_dot(tmp)
        test_global_usage()
    print(f"cli: all {CHECKS} checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
