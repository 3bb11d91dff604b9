#pragma once

#include "lcgd/enumerate.hpp"
#include "lcgd/explore.hpp"
#include "lcgd/graph.hpp"
#include "lcgd/pgd.hpp"
#include "lcgd/relations.hpp"
#include "lcgd/seq.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lcgd {

using Json = nlohmann::json;

/// Raised for unreadable or malformed input files; message carries the path.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sequences serialize as {"entries": ["0","14","36"], "offset": 0} with
// decimal strings (consumers with narrow integers stay safe); bare JSON
// integers are accepted on input, and "offset" defaults to 0.
Json to_json(const Seq& s);
Seq seq_from_json(const Json& j);

Json to_json(const Verdict& v);
Json to_json(const SeqReport& r);
Json to_json(const CollectionClass& c);

Json to_json(const SingleRootPGD& p);
SingleRootPGD single_pgd_from_json(const Json& j);

// All ten keys dd0,dd1,dd2,ds0,ds1,sd0,sd1,ss0,ss1,ss2 are required.
Json to_json(const DoubleRootPGD& p);
DoubleRootPGD double_pgd_from_json(const Json& j);

Json to_json(const AbbrevQuad& q);
Json to_json(const ChainReport& r);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const Violation& v);
Json to_json(const ScanReport& r, bool with_timings = false);

Json load_json(const std::string& path);

Seq load_seq(const std::string& path);

/// Loads and validates. The total D+S must have no internal zeros; when D or
/// S alone has one, a warning is appended instead (whether partials can have
/// internal zeros is open).
SingleRootPGD load_single_pgd(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Loads and validates: nonnegative entries, and the aggregate
/// DD+DS+SD+SS must have no internal zeros. Warnings as above for the
/// suppressed D/S.
DoubleRootPGD load_double_pgd(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Loads and validates connectivity and root valences.
Graph load_graph(const std::string& path);

}  // namespace lcgd
