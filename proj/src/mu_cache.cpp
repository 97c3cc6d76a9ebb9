#include "permmob/mu_cache.hpp"

#include <charconv>
#include <iostream>
#include <sstream>
#include <vector>

#include "permmob/poset.hpp"
#include "permmob/text.hpp"

namespace permmob {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

template <typename T>
bool parse_number(const std::string& s, T& value) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  return !s.empty() && ec == std::errc{} && ptr == end;
}

std::pair<Permutation, Permutation> parse_key(const std::string& key) {
  const auto bar = key.find('|');
  if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos)
    throw std::invalid_argument("cache key must be '<sigma>|<tau>'");
  return {parse_permutation(key.substr(0, bar)), parse_permutation(key.substr(bar + 1))};
}

std::string format_line(const CacheEntry& e) {
  return e.key + '\t' + std::to_string(e.mu) + '\t' + std::to_string(e.node_count) + '\t' +
         e.engine_version + '\n';
}

}  // namespace

MuCache::MuCache(std::filesystem::path path, std::string engine_version)
    : path_(std::move(path)), version_(std::move(engine_version)) {
  load();
  out_.open(path_, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open cache file " + path_.string());
}

std::string MuCache::key(const Permutation& sigma, const Permutation& tau) {
  return to_string(sigma) + "|" + to_string(tau);
}

void MuCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  bool corrupt = false;
  bool stale = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    CacheEntry e;
    bool ok = fields.size() == 4 && parse_number(fields[1], e.mu) &&
              parse_number(fields[2], e.node_count);
    if (ok) {
      try {
        const auto [sigma, tau] = parse_key(fields[0]);
        ok = fields[0] == key(sigma, tau) && contains(sigma, tau);
      } catch (const std::invalid_argument&) {
        ok = false;
      }
    }
    if (!ok) {
      corrupt = true;
      continue;
    }
    e.key = fields[0];
    e.engine_version = fields[3];
    if (e.engine_version != version_) {
      stale = true;
      continue;
    }
    entries_[e.key] = std::move(e);
  }
  in.close();
  if (corrupt) {
    std::cerr << "warning: cache file " << path_.string()
              << " had malformed entries; rewriting\n";
    recovered_ = true;
  }
  if (corrupt || stale) {
    std::ofstream rewrite(path_, std::ios::trunc);
    for (const auto& [k, e] : entries_) rewrite << format_line(e);
  }
}

std::int64_t MuCache::get_or_compute(const Permutation& sigma, const Permutation& tau,
                                     const std::function<MuResult()>& compute) {
  const std::string k = key(sigma, tau);
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(k); it != entries_.end()) {
      ++hits_;
      return it->second.mu;
    }
    ++misses_;
  }
  const MuResult r = compute();
  std::lock_guard lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(k, CacheEntry{k, r.mu, r.node_count, version_});
  if (inserted) {
    out_ << format_line(it->second);
    out_.flush();
  }
  return it->second.mu;
}

std::int64_t MuCache::get_or_compute(const std::string& key) {
  const auto [sigma, tau] = parse_key(key);
  return get_or_compute(sigma, tau, [&] {
    const auto dag = build_interval(sigma, tau);
    return MuResult{mobius(dag), dag.size()};
  });
}

std::optional<CacheEntry> MuCache::lookup(const std::string& key) const {
  std::lock_guard lock(mutex_);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::size_t MuCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::size_t MuCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::size_t MuCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

}  // namespace permmob
