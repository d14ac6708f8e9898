#include "natdual/io.hpp"

#include <sstream>

namespace natdual {

namespace {

template <class F>
auto parse_guard(F&& f) {
  try {
    return f();
  } catch (Json::exception const& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

Json values_json(std::vector<Elem> const& values) {
  Json out = Json::array();
  for (Elem v : values) out.push_back(v == kUndefined ? Json(nullptr) : Json(v));
  return out;
}

std::vector<Elem> values_from(Json const& j) {
  std::vector<Elem> out;
  for (auto const& v : j) out.push_back(v.is_null() ? kUndefined : v.get<Elem>());
  return out;
}

}  // namespace

Json to_json(FiniteAlgebra const& a) {
  Json j;
  j["id"] = a.id();
  j["labels"] = a.labels();
  if (a.has_names()) {
    std::vector<std::string> names;
    for (Elem e = 0; e < static_cast<Elem>(a.size()); ++e) names.push_back(a.name(e));
    j["names"] = names;
  }
  Json sig = Json::array();
  Json tables = Json::object();
  auto lab = [&](Elem e) { return a.label(e); };
  auto const n = static_cast<Elem>(a.size());
  for (auto const& op : a.signature().ops()) {
    std::string const name(to_string(op.symbol));
    sig.push_back({{"arity", op.arity}, {"symbol", name}});
    if (a.empty()) continue;
    if (op.arity == 0) {
      tables[name] = lab(a.constant(op.symbol));
    } else if (op.arity == 1) {
      Json row = Json::array();
      for (Elem x = 0; x < n; ++x) row.push_back(lab(a.unary(op.symbol, x)));
      tables[name] = row;
    } else {
      Json rows = Json::array();
      for (Elem x = 0; x < n; ++x) {
        Json row = Json::array();
        for (Elem y = 0; y < n; ++y) row.push_back(lab(a.binary(op.symbol, x, y)));
        rows.push_back(row);
      }
      tables[name] = rows;
    }
  }
  j["signature"] = sig;
  j["tables"] = tables;
  return j;
}

FiniteAlgebra algebra_from_json(Json const& j) {
  return parse_guard([&] {
    auto const labels = j.at("labels").get<std::vector<int>>();
    std::vector<OpSpec> ops;
    for (auto const& o : j.at("signature"))
      ops.push_back({op_symbol_from_string(o.at("symbol").get<std::string>()), o.at("arity").get<int>()});
    Signature const sig(ops);
    auto index = [&](int label) -> Elem {
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<Elem>(i);
      throw Error(ErrorKind::parse, "unknown label " + std::to_string(label));
    };
    std::array<std::vector<Elem>, kOpSymbolCount> tables{};
    auto const& t = j.at("tables");
    for (auto const& op : ops) {
      auto& out = tables[static_cast<std::size_t>(op.symbol)];
      if (labels.empty()) {
        if (op.arity == 0) out.push_back(kUndefined);
        continue;
      }
      auto const& v = t.at(std::string(to_string(op.symbol)));
      if (op.arity == 0) {
        out.push_back(index(v.get<int>()));
      } else if (op.arity == 1) {
        for (auto const& x : v) out.push_back(index(x.get<int>()));
      } else {
        for (auto const& row : v)
          for (auto const& x : row) out.push_back(index(x.get<int>()));
      }
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteAlgebra(j.at("id").get<std::string>(), sig, labels, std::move(tables), std::move(names));
  });
}

Json to_json(PartialMap const& p) {
  return {{"dst", p.dst()}, {"src", p.src()}, {"values", values_json(p.values())}};
}

PartialMap partial_map_from_json(Json const& j) {
  return parse_guard([&] {
    return PartialMap(j.at("src").get<std::string>(), j.at("dst").get<std::string>(), values_from(j.at("values")));
  });
}

Json to_json(Relation const& r) {
  Json pairs = Json::array();
  for (auto [a, b] : r.pairs()) pairs.push_back({a, b});
  return {{"dst", r.dst()}, {"pairs", pairs}, {"src", r.src()}};
}

Relation relation_from_json(Json const& j) {
  return parse_guard([&] {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (auto const& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<Elem>(), p.at(1).get<Elem>());
    return Relation(j.at("src").get<std::string>(), j.at("dst").get<std::string>(), std::move(pairs));
  });
}

Json to_json(MultisortedStructure const& x) {
  Json j;
  j["id"] = x.id;
  Json sorts = Json::array();
  for (std::size_t i = 0; i < x.sorts.size(); ++i) {
    std::vector<std::string> names;
    for (Elem p = 0; p < static_cast<Elem>(x.sizes[i]); ++p) names.push_back(x.point_name(i, p));
    sorts.push_back({{"name", x.sorts[i]}, {"points", names}, {"size", x.sizes[i]}});
  }
  j["sorts"] = sorts;
  auto ops = [&](std::vector<SortOp> const& list) {
    Json out = Json::array();
    for (auto const& op : list)
      out.push_back({{"dst", x.sorts[op.dst]}, {"name", op.name}, {"src", x.sorts[op.src]}, {"values", values_json(op.values)}});
    return out;
  };
  j["gops"] = ops(x.gops);
  j["hops"] = ops(x.hops);
  Json consts = Json::array();
  for (auto const& c : x.consts) consts.push_back({{"name", c.name}, {"point", c.point}, {"sort", x.sorts[c.sort]}});
  j["consts"] = consts;
  Json rels = Json::array();
  for (auto const& r : x.rels) {
    Json pairs = Json::array();
    for (auto [a, b] : r.pairs) pairs.push_back({a, b});
    rels.push_back({{"dst", x.sorts[r.dst]}, {"name", r.name}, {"pairs", pairs}, {"src", x.sorts[r.src]}});
  }
  j["rels"] = rels;
  return j;
}

MultisortedStructure structure_from_json(Json const& j) {
  return parse_guard([&] {
    MultisortedStructure x;
    x.id = j.at("id").get<std::string>();
    for (auto const& s : j.at("sorts")) {
      x.sorts.push_back(s.at("name").get<std::string>());
      x.sizes.push_back(s.at("size").get<std::size_t>());
      x.point_names.push_back(s.at("points").get<std::vector<std::string>>());
    }
    auto ops = [&](Json const& list) {
      std::vector<SortOp> out;
      for (auto const& o : list)
        out.push_back({o.at("name").get<std::string>(), x.sort_index(o.at("src").get<std::string>()),
                       x.sort_index(o.at("dst").get<std::string>()), values_from(o.at("values"))});
      return out;
    };
    x.gops = ops(j.at("gops"));
    x.hops = ops(j.at("hops"));
    for (auto const& c : j.at("consts"))
      x.consts.push_back({c.at("name").get<std::string>(), x.sort_index(c.at("sort").get<std::string>()),
                          c.at("point").get<Elem>()});
    for (auto const& r : j.at("rels")) {
      SortRel rel{r.at("name").get<std::string>(), x.sort_index(r.at("src").get<std::string>()),
                  x.sort_index(r.at("dst").get<std::string>()), {}};
      for (auto const& p : r.at("pairs")) rel.pairs.emplace_back(p.at(0).get<Elem>(), p.at(1).get<Elem>());
      x.rels.push_back(std::move(rel));
    }
    x.validate();
    return x;
  });
}

Json to_json(KleeneSpace const& s) {
  Json order = Json::array();
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (x != y && s.leq(static_cast<int>(x), static_cast<int>(y))) order.push_back({x, y});
  return {{"g", s.g}, {"id", s.id}, {"order", order}, {"points", s.names}};
}

std::string to_dot(MultisortedStructure const& x) {
  std::ostringstream os;
  os << "digraph \"" << x.id << "\" {\n";
  auto node = [](std::size_t s, Elem p) { return "s" + std::to_string(s) + "_" + std::to_string(p); };
  for (std::size_t s = 0; s < x.sorts.size(); ++s) {
    os << "  subgraph cluster_" << s << " {\n    label=\"" << x.sorts[s] << "\";\n";
    for (Elem p = 0; p < static_cast<Elem>(x.sizes[s]); ++p)
      os << "    " << node(s, p) << " [label=\"" << x.point_name(s, p) << "\"];\n";
    os << "  }\n";
  }
  auto ops = [&](std::vector<SortOp> const& list) {
    for (auto const& op : list)
      for (std::size_t p = 0; p < op.values.size(); ++p) {
        if (op.values[p] == kUndefined) continue;
        os << "  " << node(op.src, static_cast<Elem>(p)) << " -> " << node(op.dst, op.values[p]) << " [label=\""
           << op.name << "\"" << (op.src != op.dst ? ", style=dashed" : "") << "];\n";
      }
  };
  ops(x.gops);
  ops(x.hops);
  for (auto const& r : x.rels)
    for (auto [a, b] : r.pairs) {
      if (r.src == r.dst && a == b) continue;
      os << "  " << node(r.src, a) << " -> " << node(r.dst, b) << " [label=\"" << r.name << "\", arrowhead=empty"
         << (r.src != r.dst ? ", style=dashed" : "") << "];\n";
    }
  for (auto const& c : x.consts) os << "  " << node(c.sort, c.point) << " [shape=doublecircle];\n";
  os << "}\n";
  return os.str();
}

}  // namespace natdual
