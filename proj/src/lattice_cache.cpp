#include "cw/lattice/cache.hpp"

#include <zlib.h>

#include <fstream>
#include <sstream>
#include <string>

#include "cw/errors.hpp"

namespace cw {

namespace {

const char* convention_tag(RootConvention c) { return c == RootConvention::roots ? "roots" : "coroots"; }

std::uint32_t checksum(const std::string& body) {
  return static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(body.data()), static_cast<uInt>(body.size())));
}

std::string render(const SubgroupLattice& lat) {
  std::ostringstream os;
  os << "cw-lattice " << kLatticeCacheVersion << "\n";
  os << "type " << lat.system().type().name() << "\n";
  os << "convention " << convention_tag(lat.convention()) << "\n";
  os << "reflections " << lat.system().num_reflections() << "\n";
  os << "classes " << lat.size() << "\n";
  const bool rc = lat.has_root_closure();
  os << std::hex;
  for (ClassId c = 0; c < lat.size(); ++c) {
    os << lat.bits(c) << std::dec << " " << lat.parabolic_closure(c) << " " << lat.parabolic_rank(c) << " "
       << (rc ? static_cast<long>(lat.root_closure(c)) : -1L) << std::hex << "\n";
  }
  return os.str();
}

}  // namespace

std::filesystem::path lattice_cache_path(const std::filesystem::path& dir, const CoxeterType& type,
                                         RootConvention convention) {
  std::string name = type.name();
  for (auto& ch : name)
    if (ch == ':') ch = '_';
  return dir / ("lattice-" + name + "-" + convention_tag(convention) + ".txt");
}

std::optional<SubgroupLattice> load_cached_lattice(const std::filesystem::path& dir, const CoxeterSystem& sys,
                                                   const LatticeOptions& options) {
  std::ifstream in(lattice_cache_path(dir, sys.type(), options.convention), std::ios::binary);
  if (!in) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto tail = text.rfind("crc32 ");
  if (tail == std::string::npos) return std::nullopt;
  const std::string body = text.substr(0, tail);
  try {
    if (std::stoul(text.substr(tail + 6), nullptr, 16) != checksum(body)) return std::nullopt;
    std::istringstream is(body);
    std::string key, value;
    int version = 0;
    std::size_t refl = 0, classes = 0;
    is >> key >> version;
    if (key != "cw-lattice" || version != kLatticeCacheVersion) return std::nullopt;
    is >> key >> value;
    if (key != "type" || value != sys.type().name()) return std::nullopt;
    is >> key >> value;
    if (key != "convention" || value != convention_tag(options.convention)) return std::nullopt;
    is >> key >> refl;
    if (key != "reflections" || refl != sys.num_reflections()) return std::nullopt;
    is >> key >> classes;
    if (key != "classes" || classes == 0 || classes > options.state_cap) return std::nullopt;
    SubgroupLattice::Snapshot snap;
    snap.bits.reserve(classes);
    for (std::size_t c = 0; c < classes; ++c) {
      ReflectionSet b = 0;
      long p = 0, r = 0, root = 0;
      if (!(is >> std::hex >> b >> std::dec >> p >> r >> root)) return std::nullopt;
      snap.bits.push_back(b);
      snap.parabolic_closure.push_back(static_cast<ClassId>(p));
      snap.parabolic_rank.push_back(static_cast<int>(r));
      if (root >= 0) snap.root_closure.push_back(static_cast<ClassId>(root));
    }
    if (!snap.root_closure.empty() && snap.root_closure.size() != classes) return std::nullopt;
    return SubgroupLattice::from_snapshot(sys, std::move(snap), options);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_lattice(const std::filesystem::path& dir, const SubgroupLattice& lattice) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  const auto path = lattice_cache_path(dir, lattice.system().type(), lattice.convention());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    const std::string body = render(lattice);
    std::ostringstream tail;
    tail << "crc32 " << std::hex << checksum(body) << "\n";
    out << body << tail.str();
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

SubgroupLattice cached_lattice(const std::optional<std::filesystem::path>& dir, const CoxeterSystem& sys,
                               const LatticeOptions& options, bool* hit) {
  if (hit) *hit = false;
  if (dir) {
    if (auto lat = load_cached_lattice(*dir, sys, options)) {
      if (hit) *hit = true;
      return std::move(*lat);
    }
  }
  SubgroupLattice lat = SubgroupLattice::build(sys, options);
  if (dir) store_lattice(*dir, lat);
  return lat;
}

}  // namespace cw
