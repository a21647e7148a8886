#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "strongdom/bounds.hpp"
#include "strongdom/families.hpp"
#include "strongdom/graph_io.hpp"
#include "strongdom/random_graphs.hpp"
#include "strongdom/report.hpp"

using namespace strongdom;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_text(in, "<test>");
}

void expect_parse_error(const std::string& text, const std::string& needle) {
    try {
        parse(text);
        CHECK_MESSAGE(false, "expected ParseError for: " << text);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse_error);
        CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                      "message '" << e.what() << "' lacks '" << needle << "'");
    }
}

} // namespace

TEST_SUITE("cli_io") {

TEST_CASE("parse minimal graph") {
    Graph g = parse("n 2\ne 0 1\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.label(0) == "v0");
}

TEST_CASE("labels and blank lines") {
    Graph g = parse("n 3\n\nl 0 x1\nl 2 y1\ne 0 1\ne 1 2\n");
    CHECK(g.label(0) == "x1");
    CHECK(g.label(1) == "v1");
    CHECK(g.label(2) == "y1");
}

TEST_CASE("parse errors carry line numbers") {
    expect_parse_error("n 2\ne 0 0\n", "<test>:2");
    expect_parse_error("n 2\nz 0 1\n", "unknown line type 'z'");
    expect_parse_error("n 2\ne 0 2\n", "out of range");
    expect_parse_error("e 0 1\n", "before header");
    expect_parse_error("n 2\nl 0 a\nl 0 b\n", "duplicate label line");
    expect_parse_error("n 2\nl 0 a\nl 1 a\n", "duplicate label");
    expect_parse_error("n 2\ne 0 1 9\n", "expected 'e <a> <b>'");
    expect_parse_error("", "missing 'n <count>' header");
    expect_parse_error("n 2\nn 2\n", "duplicate header");
}

TEST_CASE("duplicate edges in files are tolerated") {
    Graph g = parse("n 3\ne 0 1\ne 1 0\ne 1 2\n");
    CHECK(g.edge_count() == 2);
}

TEST_CASE("text round-trip is exact and stable") {
    Graph k6 = complete_graph(6);
    std::string once = to_text(k6);
    std::istringstream in(once);
    Graph back = parse_graph_text(in, "<roundtrip>");
    CHECK(back == k6);
    CHECK(to_text(back) == once);
}

TEST_CASE("json round-trip") {
    HajosSpec spec = k6_c6_instance();
    Graph fused = hajos_sum(spec).graph; // carries a vH(..) label
    std::string doc = to_json_string(fused);
    Graph back = parse_graph_json(doc, "<json>");
    CHECK(back == fused);
    CHECK(to_json_string(back) == doc);

    CHECK_THROWS_AS(parse_graph_json("{\"edges\": []}", "<json>"), Error);
    CHECK_THROWS_AS(parse_graph_json("{\"n\": 2, \"edges\": [[0,0]]}", "<json>"), Error);
    CHECK_THROWS_AS(parse_graph_json("not json", "<json>"), Error);
}

TEST_CASE("file round-trip through both formats") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "strongdom_io_test";
    fs::create_directories(dir);

    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = erdos_renyi(rng, uniform_int(rng, 1, 12), pick_density(rng));
        for (const char* name : {"g.g", "g.json"}) {
            fs::path path = dir / name;
            write_graph(g, path.string());
            Graph back = read_graph(path.string());
            CHECK(back == g);
        }
    }
    fs::remove_all(dir);
}

TEST_CASE("report rendering keeps the numeric content aligned") {
    BoundReport row;
    row.instance = "hajos n1=6 n2=6 x1=0 y1=1 x2=0 y2=1";
    row.part_gamma = {1, 2};
    row.part_degree = {5, 2};
    row.lower = -2;
    row.upper = 4;
    row.exact = 3;
    row.holds = true;
    row.tight = TightSide::none;

    std::string csv = render_report({row}, ReportFormat::csv);
    CHECK(csv.find("instance,gst_parts,degrees,lower,upper,exact,tight,holds") == 0);
    CHECK(csv.find("1;2,5;2,-2,4,3,none,true") != std::string::npos);

    std::string table = render_report({row}, ReportFormat::table);
    for (const char* field : {"1;2", "5;2", "-2", "4", "3", "none", "true"})
        CHECK(table.find(field) != std::string::npos);

    std::string json = render_report({row}, ReportFormat::json);
    CHECK(json.find("\"lower\": -2") != std::string::npos);
    CHECK(json.find("\"exact\": 3") != std::string::npos);
    CHECK(json.find("\"holds\": true") != std::string::npos);

    CHECK_THROWS_AS(parse_report_format("yaml"), Error);
}

} // TEST_SUITE
