#include "r3/dispatcher.hpp"

#include <cassert>
#include <cstdint>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "r3/branch.hpp"
#include "r3/refine.hpp"

namespace r3 {

namespace {

std::string digest_of(const PermGroup& g)
{
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  mix(g.degree());
  for (const Perm& p : g.generators())
    for (uint32_t x = 0; x < g.degree(); ++x)
      mix(p[x]);

  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 15];
    h >>= 4;
  }
  return out;
}

} // namespace

bool verify_candidate(const PermGroup& g, const PermGroup& h,
                      const OrbitalStructure& os)
{
  if (g.degree() != h.degree())
    return false;
  if (!h.contains_all(g.generators()))
    return false;
  for (const Perm& x : h.generators())
    if (!preserves_orbitals(os, x))
      return false;
  return true;
}

bool verify_candidate(const PermGroup& g, const PermGroup& h)
{
  return verify_candidate(g, h, two_orbits(g));
}

ClosureReport two_closure(const PermGroup& g, const ClosureOptions& opt)
{
  ClosureReport rep;
  rep.digest = digest_of(g);
  rep.degree = g.degree();

  OrbitalStructure os = two_orbits(g);
  rep.rank = os.rank;
  if (!g.is_transitive() || !is_rank3(os)) {
    rep.status = ClosureStatus::not_rank3;
    return rep;
  }
  rep.subdegrees = subdegrees(os);

  struct Candidate {
    std::string name;
    PermGroup group;
  };
  std::vector<Candidate> cands;

  using Runner = BranchResult (*)(const PermGroup&, const OrbitalStructure&);
  const std::pair<const char*, Runner> table[] = {{"nonaffine", run_nonaffine},
                                                  {"small", run_small},
                                                  {"tensor", run_tensor},
                                                  {"qform", run_qform}};
  for (const auto& [name, run] : table) {
    BranchResult r = run(g, os);
    BranchOutcome out;
    out.name = name;
    out.ok = r.ok();
    out.note = r.note;
    if (r.ok()) {
      out.order = r.group->order();
      out.verified = verify_candidate(g, *r.group, os);
      if (out.verified)
        cands.push_back(Candidate{name, std::move(*r.group)});
      else
        rep.diagnostic += std::string("branch ") + name +
                          " returned an unverifiable group; ";
    }
    rep.branches.push_back(std::move(out));
  }

  bool want_oracle =
      opt.oracle == OracleMode::on ||
      (opt.oracle == OracleMode::automatic && g.degree() <= opt.threshold);
  if (want_oracle) {
    AutOptions ao;
    ao.max_degree = g.degree();
    auto oracle = oracle_two_closure(g, ao);
    if (oracle) {
      rep.oracle_order = oracle->order();
      for (const Candidate& c : cands)
        if (!c.group.is_subgroup_of(*oracle))
          rep.diagnostic +=
              "branch " + c.name + " exceeds the oracle closure; ";
      assert(verify_candidate(g, *oracle, os));
      cands.push_back(Candidate{"oracle", std::move(*oracle)});
    } else if (opt.oracle == OracleMode::on) {
      rep.diagnostic += "oracle budget exceeded; ";
    }
  }

  if (cands.empty()) {
    rep.status = ClosureStatus::unresolved;
    return rep;
  }

  size_t best = 0;
  for (size_t i = 1; i < cands.size(); ++i)
    if (cands[best].group.order() < cands[i].group.order())
      best = i;
  for (size_t i = 0; i < cands.size(); ++i) {
    if (i == best || cands[i].group.order() != cands[best].group.order())
      continue;
    if (!cands[i].group.same_group(cands[best].group)) {
      rep.diagnostic += "order tie between " + cands[best].name + " and " +
                        cands[i].name + " with different groups; ";
      rep.status = ClosureStatus::unresolved;
      return rep;
    }
  }

  rep.status = ClosureStatus::solved;
  rep.chosen = cands[best].name;
  rep.group = std::move(cands[best].group);
  rep.verified = true;
  return rep;
}

std::string report_json(const ClosureReport& rep)
{
  nlohmann::json j;
  j["digest"] = rep.digest;
  j["degree"] = rep.degree;
  j["rank"] = rep.rank;
  j["subdegrees"] = rep.subdegrees;

  const char* status = rep.status == ClosureStatus::solved ? "solved"
                       : rep.status == ClosureStatus::not_rank3
                           ? "not rank 3"
                           : "unresolved";
  j["status"] = status;

  j["branches"] = nlohmann::json::object();
  for (const BranchOutcome& b : rep.branches)
    j["branches"][b.name] = {{"status", b.ok ? "ok" : "fail"},
                             {"order", b.order.str()},
                             {"note", b.note},
                             {"verified", b.verified}};

  j["chosen"] = rep.chosen;
  j["order"] = rep.group ? rep.group->order().str() : "0";
  j["generators"] = nlohmann::json::array();
  if (rep.group)
    for (const Perm& p : rep.group->generators()) {
      std::vector<uint32_t> img(rep.degree);
      for (uint32_t x = 0; x < rep.degree; ++x)
        img[x] = p[x];
      j["generators"].push_back(img);
    }
  j["verified"] = rep.verified;
  if (rep.oracle_order)
    j["oracle_order"] = rep.oracle_order->str();
  if (!rep.diagnostic.empty())
    j["diagnostic"] = rep.diagnostic;
  return j.dump(2);
}

std::string report_text(const ClosureReport& rep)
{
  std::ostringstream out;
  out << "digest " << rep.digest << '\n';
  out << "degree " << rep.degree << '\n';
  out << "rank " << rep.rank << '\n';
  if (!rep.subdegrees.empty()) {
    out << "subdegrees";
    for (uint64_t s : rep.subdegrees)
      out << ' ' << s;
    out << '\n';
  }
  for (const BranchOutcome& b : rep.branches) {
    out << "branch " << b.name << ": ";
    if (b.ok)
      out << "order " << b.order.str() << " (" << b.note << ")"
          << (b.verified ? " verified" : " UNVERIFIED");
    else
      out << "fail (" << b.note << ")";
    out << '\n';
  }
  if (rep.oracle_order)
    out << "oracle order " << rep.oracle_order->str() << '\n';
  if (!rep.diagnostic.empty())
    out << "diagnostic " << rep.diagnostic << '\n';

  if (rep.status == ClosureStatus::not_rank3) {
    out << "status not rank 3\n";
    return out.str();
  }
  if (rep.status == ClosureStatus::unresolved) {
    out << "status unresolved\n";
    return out.str();
  }

  out << "chosen " << rep.chosen << '\n';
  out << "order " << rep.group->order().str() << '\n';
  for (const Perm& p : rep.group->generators()) {
    out << "generator [";
    for (uint32_t x = 0; x < rep.degree; ++x)
      out << (x ? "," : "") << p[x];
    out << "]\n";
  }
  return out.str();
}

} // namespace r3
