#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graffiti/bytes.hpp"
#include "graffiti/canonical_json.hpp"

namespace graffiti {

struct FileEntry {
    std::string path;
    std::uint64_t length = 0;

    bool operator==(const FileEntry&) const = default;
};

// Description of a shared fileset: chunk geometry, piece digests and the
// tracker coordinates. The serialized form is canonical JSON (sorted keys,
// no whitespace); info_hash is the SHA-256 of that form with the
// info_hash field itself omitted.
struct FilesetManifest {
    int version = 1;
    std::string name;
    std::vector<FileEntry> files;
    std::uint64_t piece_length = 0;
    std::uint64_t subpiece_length = 0;
    std::vector<std::string> piece_checksums;
    std::string tracker_url;
    std::string info_hash;

    std::uint64_t total_bytes() const;
    std::uint64_t piece_count() const;
    std::uint64_t piece_bytes(std::uint64_t piece_index) const;
    std::uint64_t subpieces_per_piece() const { return piece_length / subpiece_length; }
    std::uint64_t subpiece_count() const;

    bool operator==(const FilesetManifest&) const = default;
};

// One sub-piece slot within a fileset. The ordinal is
// piece_index * subpieces_per_piece + subpiece_index and is strictly
// increasing in file order.
struct SubPieceRef {
    std::uint64_t piece_index = 0;
    std::uint64_t subpiece_index = 0;
    std::uint64_t length = 0;
    std::string checksum; // SHA-256 of the plaintext sub-piece, lowercase hex

    bool operator==(const SubPieceRef&) const = default;
};

// Geometry without checksums, derivable from the manifest alone.
struct SubPieceGeom {
    std::uint64_t piece_index = 0;
    std::uint64_t subpiece_index = 0;
    std::uint64_t length = 0;
    std::uint64_t ordinal = 0;
};

std::uint64_t subpiece_ordinal(const FilesetManifest& m, std::uint64_t piece, std::uint64_t sub);
std::vector<SubPieceGeom> subpiece_table(const FilesetManifest& m);

FilesetManifest build_manifest(const std::vector<std::pair<std::string, Bytes>>& files,
                               std::uint64_t piece_length, std::uint64_t subpiece_length,
                               const std::string& tracker_url, const std::string& name);

std::vector<std::pair<SubPieceRef, Bytes>> split(BytesView fileset, const FilesetManifest& m);

// Accepts blocks in any order. Throws Errc::incomplete (message lists the
// missing ordinals) or Errc::corruption (message names the offending
// sub-piece) before returning anything.
Bytes assemble(const std::vector<std::pair<SubPieceRef, Bytes>>& blocks, const FilesetManifest& m);

Json manifest_to_json(const FilesetManifest& m);
FilesetManifest manifest_from_json(const Json& j);       // verifies info_hash
std::string manifest_canonical_text(const FilesetManifest& m);
void save_manifest(const std::string& path, const FilesetManifest& m);
FilesetManifest load_manifest(const std::string& path);

} // namespace graffiti
