#include "arrlab/generators.hpp"

#include <sstream>

#include "arrlab/errors.hpp"
#include "arrlab/rng.hpp"

namespace arrlab {

GeneratorSpec parse_generator_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw BadSpec("empty generator spec");

  auto to_int = [&](const std::string& s) -> long long {
    try {
      size_t pos = 0;
      const long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw BadSpec("bad integer in generator spec: " + s);
      return v;
    } catch (const std::exception&) {
      throw BadSpec("bad integer in generator spec: " + s);
    }
  };

  GeneratorSpec spec;
  if (parts[0] == "boolean") {
    if (parts.size() != 2) throw BadSpec("usage: boolean:D");
    spec.family = GeneratorSpec::Family::Boolean;
    spec.count = static_cast<int>(to_int(parts[1]));
  } else if (parts[0] == "braid") {
    if (parts.size() != 2) throw BadSpec("usage: braid:N");
    spec.family = GeneratorSpec::Family::Braid;
    spec.count = static_cast<int>(to_int(parts[1]));
  } else if (parts[0] == "threelines") {
    if (parts.size() != 1) throw BadSpec("usage: threelines");
    spec.family = GeneratorSpec::Family::ThreeLines;
  } else if (parts[0] == "random") {
    if (parts.size() != 4 && parts.size() != 5) throw BadSpec("usage: random:M:D:SEED[:RANGE]");
    spec.family = GeneratorSpec::Family::Random;
    spec.count = static_cast<int>(to_int(parts[1]));
    spec.dim = static_cast<int>(to_int(parts[2]));
    spec.seed = static_cast<uint64_t>(to_int(parts[3]));
    if (parts.size() == 5) spec.range = to_int(parts[4]);
  } else {
    throw BadSpec("unknown generator family: " + parts[0]);
  }
  return spec;
}

std::string spec_name(const GeneratorSpec& spec) {
  std::ostringstream os;
  switch (spec.family) {
    case GeneratorSpec::Family::Boolean: os << "boolean:" << spec.count; break;
    case GeneratorSpec::Family::Braid: os << "braid:" << spec.count; break;
    case GeneratorSpec::Family::ThreeLines: os << "threelines"; break;
    case GeneratorSpec::Family::Random:
      os << "random:" << spec.count << ":" << spec.dim << ":" << spec.seed << ":" << spec.range;
      break;
  }
  return os.str();
}

Arrangement generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case GeneratorSpec::Family::Boolean: {
      if (spec.count < 1) throw BadSpec("boolean dimension must be >= 1");
      RatMat normals(spec.count, RatVec(spec.count, Rational(0)));
      for (int i = 0; i < spec.count; ++i) normals[i][i] = 1;
      return canonicalize(normals, spec.count);
    }
    case GeneratorSpec::Family::Braid: {
      if (spec.count < 2) throw BadSpec("braid requires n >= 2");
      RatMat normals;
      for (int i = 0; i < spec.count; ++i) {
        for (int j = i + 1; j < spec.count; ++j) {
          RatVec v(spec.count, Rational(0));
          v[i] = 1;
          v[j] = -1;
          normals.push_back(std::move(v));
        }
      }
      return canonicalize(normals, spec.count);
    }
    case GeneratorSpec::Family::ThreeLines: {
      return canonicalize({{1, 0}, {0, 1}, {1, 1}}, 2);
    }
    case GeneratorSpec::Family::Random: {
      if (spec.count < 0 || spec.dim < 1 || spec.range < 1)
        throw BadSpec("random requires M >= 0, D >= 1, RANGE >= 1");
      const CounterRng rng(spec.seed, /*stream=*/0x9e55);
      const long long span = 2 * spec.range + 1;
      RatMat picked;
      Arrangement arr = canonicalize({}, spec.dim);
      uint64_t attempt = 0;
      const uint64_t cap = 100000 + 1000ULL * spec.count;
      while (static_cast<int>(arr.size()) < spec.count) {
        if (++attempt > cap)
          throw BadSpec("random generator could not find enough distinct hyperplanes");
        RatVec v(spec.dim);
        bool zero = true;
        for (int j = 0; j < spec.dim; ++j) {
          const long long value =
              static_cast<long long>(rng.bits(attempt, static_cast<uint32_t>(j)) % span) -
              spec.range;
          v[j] = Rational(value);
          if (value != 0) zero = false;
        }
        if (zero) continue;
        picked.push_back(std::move(v));
        arr = canonicalize(picked, spec.dim);
        if (static_cast<int>(arr.size()) < static_cast<int>(picked.size())) picked.pop_back();
      }
      return arr;
    }
  }
  throw BadSpec("unreachable generator family");
}

}  // namespace arrlab
