#pragma once

#include "owp/bounds.hpp"
#include "owp/channel.hpp"
#include "owp/partition.hpp"
#include "owp/planner_ctc.hpp"

#include <json.hpp>

#include <filesystem>

namespace owp {

using nlohmann::json;

// ---- layouts -------------------------------------------------------------

json layout_to_json(const Layout& l);
// Accepts CW input and reverses it (noted in *warning when given).
Layout layout_from_json(const json& j, std::string* warning = nullptr);

Layout load_layout(const std::filesystem::path& path, std::string* warning = nullptr);
void save_layout(const Layout& l, const std::filesystem::path& path);

// ---- results -------------------------------------------------------------

json region_to_json(const Region& r);
json deployment_to_json(const Deployment& d, const CoverageReport* cov = nullptr,
                        const ConnectivityReport* bh = nullptr);
Deployment deployment_from_json(const json& j);

json partition_to_json(const Partition& p);
json hidden_certificate_to_json(const HiddenSetCertificate& cert, const CertCheck& check);
json metrics_to_json(const Metrics& m, const ChannelParams& p, const PowerScheme& scheme,
                     int n_users, std::uint64_t seed);

void write_cdf_csv(const std::vector<double>& sorted_samples,
                   const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);
json load_json(const std::filesystem::path& path);
void save_json(const json& j, const std::filesystem::path& path);

// Run provenance goes to <output>.manifest.json so the primary outputs
// stay byte-identical across reruns.
void write_manifest(const std::filesystem::path& primary_output,
                    const std::string& command_line, const json& config);

// ---- rendering -----------------------------------------------------------

struct RenderOptions {
    bool show_partition = false;
    const Partition* partition = nullptr;
    const Deployment* deployment = nullptr;
    const CoverageReport* coverage = nullptr;
    const ConnectivityReport* backhaul = nullptr;
    double width_px = 800.0;
};

std::string render_svg(const Layout& l, const RenderOptions& opt = {});

} // namespace owp
