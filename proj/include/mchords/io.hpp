#pragma once

// File formats: disk specs (JSON), curves (CSV), and the JSON/CSV forms of
// chord reports, L_M profiles, involutes and MaxMin search results.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "mchords/chordbound.hpp"
#include "mchords/curvekit.hpp"
#include "mchords/highdim.hpp"
#include "mchords/involute.hpp"
#include "mchords/normplane.hpp"

namespace mchords {

UnitDisk disk_from_json(const nlohmann::json& spec, std::size_t resolution = UnitDisk::kDefaultResolution);
nlohmann::json disk_to_json(const UnitDisk& disk);

// "builtin:euclidean", "builtin:square", "builtin:hexagon", "builtin:lp:P" or
// a path to a JSON disk spec.
UnitDisk load_disk(const std::string& spec, std::size_t resolution = UnitDisk::kDefaultResolution);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// CSV with header x,y.
Polyline parse_curve_csv(const std::string& text);
std::string curve_to_csv(const Polyline& curve);
// CSV with header x1,...,xd.
PolylineD parse_curve_d_csv(const std::string& text);
std::string curve_d_to_csv(const PolylineD& curve);

nlohmann::json report_to_json(const ChordReport& report);

// Rows direction_rad,lm_value.
std::string profile_to_csv(const LmProfile& profile);
// {"min": ..., "argmin": ..., "max": ..., "argmax": ...} with 6 decimals.
std::string profile_summary_json(const LmProfile& profile);

// Rows theta,x,y.
std::string involute_to_csv(const InvoluteCurve& curve);

nlohmann::json maxmin_to_json(const MaxMinResult& result);

// "x,y" -> Vec2 (argument error otherwise).
Vec2 parse_vec2(const std::string& text);

}  // namespace mchords
