#include "radardet/io/frame_io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "radardet/core/error.hpp"

namespace radardet::io {

namespace {

constexpr size_t kRecordBytes = 6 * sizeof(float);

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

float le_float(const char* bytes) {
  // Little-endian payload; this build targets little-endian hosts.
  float f;
  std::memcpy(&f, bytes, sizeof(float));
  return f;
}

}  // namespace

std::vector<Box3D> parse_label_text(const std::string& text, const std::string& origin) {
  std::vector<Box3D> boxes;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string cls;
    Box3D b;
    if (!(ls >> cls >> b.cx >> b.cy >> b.cz >> b.l >> b.w >> b.h >> b.yaw)) {
      throw FormatError(origin + ":" + std::to_string(line_no) + ": malformed label line");
    }
    b.class_id = class_from_name(cls);
    if (!(b.l > 0.0 && b.w > 0.0 && b.h > 0.0)) {
      throw ValidationError(origin + ":" + std::to_string(line_no) + ": box sizes must be positive");
    }
    b.yaw = wrap_angle(b.yaw);
    boxes.push_back(b);
  }
  return boxes;
}

std::string format_label_text(const std::vector<Box3D>& boxes) {
  std::ostringstream out;
  out.precision(17);
  for (const Box3D& b : boxes) {
    out << class_name(b.class_id) << ' ' << b.cx << ' ' << b.cy << ' ' << b.cz << ' '
        << b.l << ' ' << b.w << ' ' << b.h << ' ' << b.yaw << '\n';
  }
  return out.str();
}

RadarFrame load_frame(const std::filesystem::path& rad_path,
                      const std::filesystem::path& lbl_path) {
  const std::string payload = read_file(rad_path);
  if (payload.size() % kRecordBytes != 0) {
    const size_t offset = payload.size() - payload.size() % kRecordBytes;
    throw FormatError(rad_path.string() + ": truncated record at byte offset " +
                      std::to_string(offset));
  }

  RadarFrame frame;
  frame.frame_id = rad_path.stem().string();
  const size_t n = payload.size() / kRecordBytes;
  frame.points.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const char* rec = payload.data() + i * kRecordBytes;
    RadarPoint p;
    p.x = le_float(rec + 0 * sizeof(float));
    p.y = le_float(rec + 1 * sizeof(float));
    p.z = le_float(rec + 2 * sizeof(float));
    p.rcs = le_float(rec + 3 * sizeof(float));
    p.v_r = le_float(rec + 4 * sizeof(float));
    p.v = le_float(rec + 5 * sizeof(float));
    if (!p.all_finite()) {
      throw ValidationError(rad_path.string() + ": non-finite field at point index " +
                            std::to_string(i));
    }
    frame.points.push_back(p);
  }
  frame.boxes = parse_label_text(read_file(lbl_path), lbl_path.string());
  return frame;
}

RadarFrame load_frame(const std::filesystem::path& rad_path) {
  std::filesystem::path lbl = rad_path;
  lbl.replace_extension(".lbl");
  return load_frame(rad_path, lbl);
}

void write_frame(const RadarFrame& frame, const std::filesystem::path& rad_path,
                 const std::filesystem::path& lbl_path) {
  std::ofstream rad(rad_path, std::ios::binary | std::ios::trunc);
  if (!rad) throw IoError("cannot write " + rad_path.string());
  for (const RadarPoint& p : frame.points) {
    const float rec[6] = {p.x, p.y, p.z, p.rcs, p.v_r, p.v};
    rad.write(reinterpret_cast<const char*>(rec), sizeof(rec));
  }
  rad.close();

  std::ofstream lbl(lbl_path, std::ios::trunc);
  if (!lbl) throw IoError("cannot write " + lbl_path.string());
  lbl << format_label_text(frame.boxes);
}

const std::vector<std::string>& DatasetIndex::split(const std::string& name) const {
  auto it = splits.find(name);
  if (it == splits.end()) {
    std::string avail;
    for (const auto& [k, v] : splits) avail += (avail.empty() ? "" : ", ") + k;
    throw ArgumentError("split '" + name + "' not in manifest (available: " + avail + ")");
  }
  return it->second;
}

std::filesystem::path DatasetIndex::rad_path(const std::string& frame_id) const {
  return root / "frames" / (frame_id + ".rad");
}

std::filesystem::path DatasetIndex::lbl_path(const std::string& frame_id) const {
  return root / "labels" / (frame_id + ".lbl");
}

DatasetIndex load_dataset_index(const std::filesystem::path& root) {
  DatasetIndex index;
  index.root = root;
  const auto manifest_path = root / "manifest.json";
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(manifest_path.string() + ": " + e.what());
  }
  for (const auto& [split, ids] : manifest.items()) {
    std::vector<std::string> list = ids.get<std::vector<std::string>>();
    for (const std::string& id : list) {
      for (const auto& [other, existing] : index.splits) {
        if (std::find(existing.begin(), existing.end(), id) != existing.end()) {
          throw ValidationError("frame id '" + id + "' appears in both '" + other +
                                "' and '" + split + "'");
        }
      }
    }
    index.splits[split] = std::move(list);
  }
  return index;
}

void save_manifest(const DatasetIndex& index) {
  std::filesystem::create_directories(index.root / "frames");
  std::filesystem::create_directories(index.root / "labels");
  nlohmann::json manifest;
  for (const auto& [split, ids] : index.splits) manifest[split] = ids;
  std::ofstream out(index.root / "manifest.json", std::ios::trunc);
  if (!out) throw IoError("cannot write manifest in " + index.root.string());
  out << manifest.dump(2) << '\n';
}

RadarFrame load_indexed_frame(const DatasetIndex& index, const std::string& frame_id) {
  RadarFrame f = load_frame(index.rad_path(frame_id), index.lbl_path(frame_id));
  f.frame_id = frame_id;
  return f;
}

void write_indexed_frame(const DatasetIndex& index, const RadarFrame& frame) {
  std::filesystem::create_directories(index.root / "frames");
  std::filesystem::create_directories(index.root / "labels");
  write_frame(frame, index.rad_path(frame.frame_id), index.lbl_path(frame.frame_id));
}

}  // namespace radardet::io
