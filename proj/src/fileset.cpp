#include "graffiti/fileset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "graffiti/digest.hpp"
#include "graffiti/error.hpp"

namespace graffiti {

std::uint64_t FilesetManifest::total_bytes() const {
    std::uint64_t total = 0;
    for (const auto& f : files) total += f.length;
    return total;
}

std::uint64_t FilesetManifest::piece_count() const {
    return (total_bytes() + piece_length - 1) / piece_length;
}

std::uint64_t FilesetManifest::piece_bytes(std::uint64_t piece_index) const {
    const std::uint64_t total = total_bytes();
    const std::uint64_t start = piece_index * piece_length;
    return std::min(piece_length, total - start);
}

std::uint64_t FilesetManifest::subpiece_count() const {
    std::uint64_t n = 0;
    for (std::uint64_t p = 0; p < piece_count(); ++p)
        n += (piece_bytes(p) + subpiece_length - 1) / subpiece_length;
    return n;
}

std::uint64_t subpiece_ordinal(const FilesetManifest& m, std::uint64_t piece, std::uint64_t sub) {
    return piece * m.subpieces_per_piece() + sub;
}

std::vector<SubPieceGeom> subpiece_table(const FilesetManifest& m) {
    std::vector<SubPieceGeom> out;
    for (std::uint64_t p = 0; p < m.piece_count(); ++p) {
        const std::uint64_t pbytes = m.piece_bytes(p);
        const std::uint64_t nsub = (pbytes + m.subpiece_length - 1) / m.subpiece_length;
        for (std::uint64_t s = 0; s < nsub; ++s) {
            SubPieceGeom g;
            g.piece_index = p;
            g.subpiece_index = s;
            g.length = std::min(m.subpiece_length, pbytes - s * m.subpiece_length);
            g.ordinal = subpiece_ordinal(m, p, s);
            out.push_back(g);
        }
    }
    return out;
}

static void check_geometry(std::uint64_t piece_length, std::uint64_t subpiece_length) {
    if (piece_length == 0 || subpiece_length == 0 || piece_length % subpiece_length != 0)
        fail(Errc::geometry, "piece length must be a positive multiple of the sub-piece length");
}

FilesetManifest build_manifest(const std::vector<std::pair<std::string, Bytes>>& files,
                               std::uint64_t piece_length, std::uint64_t subpiece_length,
                               const std::string& tracker_url, const std::string& name) {
    check_geometry(piece_length, subpiece_length);

    FilesetManifest m;
    m.name = name;
    m.piece_length = piece_length;
    m.subpiece_length = subpiece_length;
    m.tracker_url = tracker_url;

    Bytes all;
    for (const auto& [path, data] : files) {
        m.files.push_back({path, data.size()});
        all.insert(all.end(), data.begin(), data.end());
    }
    if (all.empty()) fail(Errc::empty_input, "fileset has no bytes");

    for (std::uint64_t off = 0; off < all.size(); off += piece_length) {
        const std::uint64_t n = std::min<std::uint64_t>(piece_length, all.size() - off);
        m.piece_checksums.push_back(sha256_hex(BytesView(all).subspan(off, n)));
    }

    Json body = manifest_to_json(m);
    body.erase("info_hash");
    m.info_hash = sha256_hex(as_bytes(canonical_dump(body)));
    return m;
}

std::vector<std::pair<SubPieceRef, Bytes>> split(BytesView fileset, const FilesetManifest& m) {
    if (fileset.size() != m.total_bytes())
        fail(Errc::length_mismatch, "fileset does not match the manifest length");

    std::vector<std::pair<SubPieceRef, Bytes>> out;
    for (const SubPieceGeom& g : subpiece_table(m)) {
        const std::uint64_t off = g.piece_index * m.piece_length + g.subpiece_index * m.subpiece_length;
        BytesView block = fileset.subspan(off, g.length);
        SubPieceRef ref{g.piece_index, g.subpiece_index, g.length, sha256_hex(block)};
        out.emplace_back(ref, Bytes(block.begin(), block.end()));
    }
    return out;
}

static std::string describe(const SubPieceRef& r) {
    return "sub-piece (" + std::to_string(r.piece_index) + "," + std::to_string(r.subpiece_index) + ")";
}

Bytes assemble(const std::vector<std::pair<SubPieceRef, Bytes>>& blocks, const FilesetManifest& m) {
    const auto table = subpiece_table(m);

    std::map<std::uint64_t, const std::pair<SubPieceRef, Bytes>*> by_ordinal;
    for (const auto& entry : blocks) {
        const std::uint64_t o = subpiece_ordinal(m, entry.first.piece_index, entry.first.subpiece_index);
        if (!by_ordinal.emplace(o, &entry).second)
            fail(Errc::corruption, "duplicate " + describe(entry.first));
    }

    std::vector<std::uint64_t> missing;
    for (const SubPieceGeom& g : table)
        if (!by_ordinal.count(g.ordinal)) missing.push_back(g.ordinal);
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << "missing sub-piece ordinals:";
        for (std::uint64_t o : missing) msg << ' ' << o;
        fail(Errc::incomplete, msg.str());
    }

    Bytes out;
    out.reserve(m.total_bytes());
    for (const SubPieceGeom& g : table) {
        const auto& [ref, data] = *by_ordinal.at(g.ordinal);
        if (data.size() != g.length || sha256_hex(data) != ref.checksum)
            fail(Errc::corruption, describe(ref) + " fails its checksum");
        out.insert(out.end(), data.begin(), data.end());
    }

    for (std::uint64_t p = 0; p < m.piece_count(); ++p) {
        const std::uint64_t off = p * m.piece_length;
        if (sha256_hex(BytesView(out).subspan(off, m.piece_bytes(p))) != m.piece_checksums[p])
            fail(Errc::corruption, "piece " + std::to_string(p) + " fails its checksum");
    }
    return out;
}

Json manifest_to_json(const FilesetManifest& m) {
    Json files = Json::array();
    for (const auto& f : m.files) files.push_back({{"path", f.path}, {"length", f.length}});
    return Json{{"version", m.version},
                {"name", m.name},
                {"files", files},
                {"piece_length", m.piece_length},
                {"subpiece_length", m.subpiece_length},
                {"piece_checksums", m.piece_checksums},
                {"tracker_url", m.tracker_url},
                {"info_hash", m.info_hash}};
}

FilesetManifest manifest_from_json(const Json& j) {
    FilesetManifest m;
    try {
        m.version = j.at("version").get<int>();
        m.name = j.at("name").get<std::string>();
        for (const auto& f : j.at("files"))
            m.files.push_back({f.at("path").get<std::string>(), f.at("length").get<std::uint64_t>()});
        m.piece_length = j.at("piece_length").get<std::uint64_t>();
        m.subpiece_length = j.at("subpiece_length").get<std::uint64_t>();
        m.piece_checksums = j.at("piece_checksums").get<std::vector<std::string>>();
        m.tracker_url = j.at("tracker_url").get<std::string>();
        m.info_hash = j.at("info_hash").get<std::string>();
    } catch (const Json::exception& e) {
        fail(Errc::parse, std::string("bad manifest: ") + e.what());
    }
    check_geometry(m.piece_length, m.subpiece_length);

    Json body = manifest_to_json(m);
    body.erase("info_hash");
    const std::string expect = sha256_hex(as_bytes(canonical_dump(body)));
    if (expect != m.info_hash) fail(Errc::corruption, "manifest info_hash does not verify");
    return m;
}

std::string manifest_canonical_text(const FilesetManifest& m) {
    return canonical_dump(manifest_to_json(m));
}

void save_manifest(const std::string& path, const FilesetManifest& m) {
    write_file(path, manifest_canonical_text(m));
}

FilesetManifest load_manifest(const std::string& path) {
    return manifest_from_json(load_json_file(path));
}

} // namespace graffiti
