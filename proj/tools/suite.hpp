#pragma once

#include "robusta/io.hpp"

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace robusta::suite {

/// Result of one reproduction item: the JSON that is compared against the
/// golden file, and whether the stated mathematical claim holds.
struct Outcome {
  io::Json payload;
  bool claim = false;
};

struct Item {
  std::string name;
  std::string claim;
  bool slow = false;
  std::function<Outcome(const std::filesystem::path& examples, unsigned threads)> run;
};

std::vector<Item> items();

} // namespace robusta::suite
