#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace ordlat::gallery {

struct Claim {
  std::string id;
  std::string location;
  std::vector<std::pair<std::string, std::string>> values;
  bool pass = false;

  Claim& value(std::string key, std::string v) {
    values.emplace_back(std::move(key), std::move(v));
    return *this;
  }
  std::string verdict() const { return pass ? "PASS" : "FAIL"; }
};

struct GalleryReport {
  std::string name;
  std::string location;
  std::vector<Claim> claims;
  double wall_ms = 0;

  Claim& add(std::string id, std::string where) {
    claims.push_back(Claim{std::move(id), std::move(where), {}, false});
    return claims.back();
  }
  bool pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
  }
  const Claim* find(const std::string& id) const {
    for (const auto& c : claims) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
};

}  // namespace ordlat::gallery
