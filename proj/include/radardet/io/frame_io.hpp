#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "radardet/core/types.hpp"

namespace radardet::io {

// Point payload: little-endian float32 records, 6 fields per point in the
// on-disk order [x, y, z, rcs, v_r, v], extension .rad.
// Labels: UTF-8 text, one `class cx cy cz l w h yaw` line per box,
// extension .lbl.

RadarFrame load_frame(const std::filesystem::path& rad_path,
                      const std::filesystem::path& lbl_path);

// Convenience: sidecar label file is the same path with extension .lbl.
RadarFrame load_frame(const std::filesystem::path& rad_path);

void write_frame(const RadarFrame& frame, const std::filesystem::path& rad_path,
                 const std::filesystem::path& lbl_path);

std::vector<Box3D> parse_label_text(const std::string& text, const std::string& origin);
std::string format_label_text(const std::vector<Box3D>& boxes);

// Dataset index: a directory holding frames/, labels/ and manifest.json
// with frame_id lists per split ("train" / "val" / "test").
struct DatasetIndex {
  std::filesystem::path root;
  std::map<std::string, std::vector<std::string>> splits;

  const std::vector<std::string>& split(const std::string& name) const;  // throws on miss
  std::filesystem::path rad_path(const std::string& frame_id) const;
  std::filesystem::path lbl_path(const std::string& frame_id) const;
};

DatasetIndex load_dataset_index(const std::filesystem::path& root);
void save_manifest(const DatasetIndex& index);
RadarFrame load_indexed_frame(const DatasetIndex& index, const std::string& frame_id);
void write_indexed_frame(const DatasetIndex& index, const RadarFrame& frame);

}  // namespace radardet::io
