/*
Copyright 2026 the drfc authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "drfc/codec.hpp"
#include "drfc/metrics.hpp"
#include "drfc/pgm.hpp"
#include "drfc/pose_json.hpp"
#include "drfc/sweep.hpp"
#include "drfc/synthetic.hpp"
#include "drfc/y4m.hpp"

namespace fs = std::filesystem;
using namespace drfc;

namespace {

struct ForwardChoice {
  ForwardRefMode mode = ForwardRefMode::kOff;
  std::string external_path;  // set for "external:<path>"
};

// Parses "off", "linear", "patchwarp", or "external:<path>".
ForwardChoice parse_forward_flag(const std::string& value) {
  ForwardChoice choice;
  const auto colon = value.find(':');
  const std::string name = value.substr(0, colon);
  choice.mode = parse_forward_mode(name);
  if (choice.mode == ForwardRefMode::kExternal) {
    if (colon == std::string::npos || colon + 1 == value.size())
      throw InputError("external mode needs a store path: --forward external:<dir|y4m>");
    choice.external_path = value.substr(colon + 1);
  } else if (colon != std::string::npos) {
    throw InputError("only the external mode takes a :path suffix");
  }
  return choice;
}

std::vector<uint8_t> read_binary(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_binary(const fs::path& path, const std::vector<uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

Frame load_iframe(const fs::path& path) {
  if (path.extension() == ".pgm") return read_pgm_file(path);
  const Y4mVideo video = read_y4m_file(path);
  if (video.frames.empty()) throw InputError("no frames in " + path.string());
  return video.frames.front();
}

void write_frame_image(const fs::path& path, const Frame& f) {
  if (path.extension() == ".pgm")
    write_pgm_file(path, f);
  else
    write_y4m_file(path, {f});
}

struct EncodeArgs {
  std::string input, poses, out;
  std::string forward = "off";
  int qp = 28;
  int gop = 32;
  int search_range = 16;
  std::string mode_decision = "sad";
  int bump_radius = 4;
  int patch_radius = 24;
};

int cmd_encode(const EncodeArgs& args) {
  const ForwardChoice fwd = parse_forward_flag(args.forward);
  EncoderConfig cfg;
  cfg.qp = args.qp;
  cfg.gop_size = args.gop;
  cfg.search_range = args.search_range;
  cfg.forward_ref_mode = fwd.mode;
  cfg.mode_decision =
      args.mode_decision == "lagrangian" ? ModeDecision::kLagrangian : ModeDecision::kSad;
  cfg.bump_radius = args.bump_radius;
  cfg.patch_radius = args.patch_radius;
  cfg.validate();

  const Y4mVideo video = read_y4m_file(args.input);
  if (video.frames.empty()) throw InputError("no frames in " + args.input);

  std::vector<Pose> poses;
  if (mode_carries_pose(cfg.forward_ref_mode)) {
    if (args.poses.empty())
      throw InputError("forward mode " + to_string(cfg.forward_ref_mode) + " requires --poses");
    const PoseDocument doc = read_pose_json_file(args.poses);
    if (doc.width != video.meta.width || doc.height != video.meta.height)
      throw DimensionError("pose document dimensions do not match the video");
    poses = doc.frames;
  }

  std::optional<ExternalFrameStore> store;
  if (cfg.forward_ref_mode == ForwardRefMode::kExternal)
    store = ExternalFrameStore::open(fwd.external_path);

  const EncodedSequence enc =
      encode_sequence(video.frames, poses, cfg, store ? &*store : nullptr);
  write_binary(args.out, enc.stream);
  std::cout << "encoded " << video.frames.size() << " frames to " << args.out << " ("
            << enc.stream.size() << " bytes)\n";
  return 0;
}

struct DecodeArgs {
  std::string in, out;
  std::string forward_store;
  int bump_radius = 4;
  int patch_radius = 24;
};

int cmd_decode(const DecodeArgs& args) {
  const std::vector<uint8_t> stream = read_binary(args.in);
  DecoderOptions opts;
  opts.bump_radius = args.bump_radius;
  opts.patch_radius = args.patch_radius;
  std::optional<ExternalFrameStore> store;
  if (!args.forward_store.empty()) {
    store = ExternalFrameStore::open(args.forward_store);
    opts.external = &*store;
  }
  const DecodedSequence dec = decode_sequence(stream, opts);
  write_y4m_file(args.out, dec.frames);
  std::cout << "decoded " << dec.frames.size() << " frames to " << args.out << '\n';
  return 0;
}

struct SynthArgs {
  std::string iframe, poses, mode = "linear", out;
  int t = 1;
  int bump_radius = 4;
  int patch_radius = 24;
};

int cmd_synth(const SynthArgs& args) {
  const Frame iframe = load_iframe(args.iframe);
  const PoseDocument doc = read_pose_json_file(args.poses);
  if (doc.frames.empty()) throw InputError("pose document has no frames");
  if (args.t < 1 || size_t(args.t) > doc.frames.size())
    throw RangeError("frame index " + std::to_string(args.t) + " outside the pose document");

  const ForwardChoice fwd = parse_forward_flag(args.mode);
  Frame result;
  if (fwd.mode == ForwardRefMode::kExternal) {
    const ExternalFrameStore store = ExternalFrameStore::open(fwd.external_path);
    result = store.load(args.t, iframe.width, iframe.height, iframe.format);
  } else {
    if (fwd.mode == ForwardRefMode::kOff) throw InputError("synth mode cannot be off");
    const SynthInputs in{&iframe, quantize_pose(doc.frames.front()),
                         quantize_pose(doc.frames[size_t(args.t) - 1])};
    result = fwd.mode == ForwardRefMode::kLinear ? synthesize_linear(in, args.bump_radius)
                                                 : synthesize_patchwarp(in, args.patch_radius);
  }
  write_frame_image(args.out, result);
  std::cout << "synthesized frame " << args.t << " to " << args.out << '\n';
  return 0;
}

struct SweepArgs {
  std::string input, poses, out;
  std::vector<int> qps = {24, 28, 34, 38};
  int gop = 32;
  int search_range = 16;
  std::vector<std::string> modes = {"off", "patchwarp"};
  std::string per_frame_prefix;
  std::string dump_dir;
};

int cmd_sweep(const SweepArgs& args) {
  SweepSpec spec;
  spec.qps = args.qps;
  spec.gop_size = args.gop;
  spec.search_range = args.search_range;
  spec.modes.clear();
  std::optional<ExternalFrameStore> store;
  for (const std::string& m : args.modes) {
    const ForwardChoice fwd = parse_forward_flag(m);
    spec.modes.push_back(fwd.mode);
    if (fwd.mode == ForwardRefMode::kExternal && !store)
      store = ExternalFrameStore::open(fwd.external_path);
  }

  const Y4mVideo video = read_y4m_file(args.input);
  if (video.frames.empty()) throw InputError("no frames in " + args.input);
  std::vector<Pose> poses;
  const bool needs_poses = std::any_of(spec.modes.begin(), spec.modes.end(), mode_carries_pose);
  if (needs_poses) {
    if (args.poses.empty()) throw InputError("the requested modes require --poses");
    const PoseDocument doc = read_pose_json_file(args.poses);
    if (doc.width != video.meta.width || doc.height != video.meta.height)
      throw DimensionError("pose document dimensions do not match the video");
    poses = doc.frames;
  }

  const SweepResult result = run_sweep(video.frames, poses, spec, store ? &*store : nullptr);

  std::ofstream csv(args.out);
  if (!csv) throw InputError("cannot create " + args.out);
  write_sweep_csv(csv, result);
  write_sweep_csv(std::cout, result);

  if (!args.dump_dir.empty()) {
    fs::create_directories(args.dump_dir);
    for (const CodecRun& run : result.cells) {
      const fs::path p = fs::path(args.dump_dir) /
                         (to_string(run.mode) + "_qp" + std::to_string(run.qp) + ".drf");
      write_binary(p, run.stream);
    }
  }
  if (!args.per_frame_prefix.empty()) {
    for (const SweepResult::BdLine& line : result.bd) {
      for (int qp : spec.qps) {
        const CodecRun& off = result.cell(ForwardRefMode::kOff, qp);
        const CodecRun& test = result.cell(line.mode, qp);
        const FrameGainTable table = per_frame_gain(off.per_frame, test.per_frame);
        std::ofstream pf(args.per_frame_prefix + "_" + to_string(line.mode) + "_qp" +
                         std::to_string(qp) + ".csv");
        write_frame_gain_csv(pf, table);
      }
    }
  }
  return 0;
}

struct GenArgs {
  int width = 128;
  int height = 128;
  int frames = 32;
  uint32_t seed = 1;
  std::string motion = "fast";
  std::string out_y4m, out_poses;
};

int cmd_gen(const GenArgs& args) {
  SyntheticSpec spec;
  spec.width = args.width;
  spec.height = args.height;
  spec.frame_count = args.frames;
  spec.seed = args.seed;
  spec.motion = parse_motion_class(args.motion);
  const SyntheticSequence seq = generate_synthetic(spec);
  write_y4m_file(args.out_y4m, seq.frames);
  write_pose_json_file(args.out_poses, seq.poses);
  std::cout << "generated " << seq.frames.size() << " frames (" << args.motion << ") to "
            << args.out_y4m << " + " << args.out_poses << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"drfc - forward-referencing video codec toolkit"};
  app.require_subcommand(1);

  EncodeArgs enc;
  auto* enc_cmd = app.add_subcommand("encode", "Encode a Y4M video into a .drf container");
  enc_cmd->add_option("--input", enc.input, "Source Y4M file")->required();
  enc_cmd->add_option("--poses", enc.poses, "Pose JSON (required for linear/patchwarp)");
  enc_cmd->add_option("--qp", enc.qp, "Quantization parameter")->check(CLI::Range(0, 51));
  enc_cmd->add_option("--gop", enc.gop, "GOP size")->check(CLI::Range(1, 255));
  enc_cmd->add_option("--forward", enc.forward, "off|linear|patchwarp|external:<dir|y4m>");
  enc_cmd->add_option("--search-range", enc.search_range, "Motion search range")
      ->check(CLI::Range(1, 64));
  enc_cmd->add_option("--mode-decision", enc.mode_decision, "sad|lagrangian")
      ->check(CLI::IsMember({"sad", "lagrangian"}));
  enc_cmd->add_option("--bump-radius", enc.bump_radius, "Heatmap kernel radius")
      ->check(CLI::Range(1, 255));
  enc_cmd->add_option("--patch-radius", enc.patch_radius, "Patch-warp radius")
      ->check(CLI::Range(1, 255));
  enc_cmd->add_option("--out", enc.out, "Output .drf path")->required();

  DecodeArgs dec;
  auto* dec_cmd = app.add_subcommand("decode", "Decode a .drf container to Y4M");
  dec_cmd->add_option("--in", dec.in, "Input .drf path")->required();
  dec_cmd->add_option("--out", dec.out, "Output Y4M path")->required();
  dec_cmd->add_option("--forward", dec.forward_store,
                      "External frame store (required for external-mode streams)");
  dec_cmd->add_option("--bump-radius", dec.bump_radius, "Must match the encoder")
      ->check(CLI::Range(1, 255));
  dec_cmd->add_option("--patch-radius", dec.patch_radius, "Must match the encoder")
      ->check(CLI::Range(1, 255));

  SynthArgs syn;
  auto* syn_cmd = app.add_subcommand("synth", "Synthesize a forward-reference frame");
  syn_cmd->add_option("--iframe", syn.iframe, "I-frame image (PGM or Y4M)")->required();
  syn_cmd->add_option("--poses", syn.poses, "Pose JSON")->required();
  syn_cmd->add_option("--t", syn.t, "Target frame index (1-based)")->required();
  syn_cmd->add_option("--mode", syn.mode, "linear|patchwarp|external:<dir|y4m>");
  syn_cmd->add_option("--bump-radius", syn.bump_radius, "")->check(CLI::Range(1, 255));
  syn_cmd->add_option("--patch-radius", syn.patch_radius, "")->check(CLI::Range(1, 255));
  syn_cmd->add_option("--out", syn.out, "Output image (PGM or Y4M)")->required();

  SweepArgs swp;
  auto* swp_cmd = app.add_subcommand("sweep", "RD sweep over QPs and modes with BD summary");
  swp_cmd->add_option("--input", swp.input, "Source Y4M file")->required();
  swp_cmd->add_option("--poses", swp.poses, "Pose JSON");
  swp_cmd->add_option("--qps", swp.qps, "QP list (>= 4 distinct)")->delimiter(',');
  swp_cmd->add_option("--gop", swp.gop, "GOP size")->check(CLI::Range(1, 255));
  swp_cmd->add_option("--search-range", swp.search_range, "")->check(CLI::Range(1, 64));
  swp_cmd->add_option("--modes", swp.modes, "Comma-separated mode list")->delimiter(',');
  swp_cmd->add_option("--per-frame", swp.per_frame_prefix,
                      "Prefix for per-frame gain CSVs (one per mode and QP)");
  swp_cmd->add_option("--dump-streams", swp.dump_dir, "Directory for the produced .drf files");
  swp_cmd->add_option("--out", swp.out, "Output CSV path")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a deterministic synthetic sequence");
  gen_cmd->add_option("--width", gen.width, "")->check(CLI::Range(16, 4096));
  gen_cmd->add_option("--height", gen.height, "")->check(CLI::Range(16, 4096));
  gen_cmd->add_option("--frames", gen.frames, "")->check(CLI::Range(1, 100000));
  gen_cmd->add_option("--seed", gen.seed, "LCG seed");
  gen_cmd->add_option("--motion", gen.motion, "fast|moderate|slow")
      ->check(CLI::IsMember({"fast", "moderate", "slow"}));
  gen_cmd->add_option("--out-y4m", gen.out_y4m, "Output Y4M path")->required();
  gen_cmd->add_option("--out-poses", gen.out_poses, "Output pose JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (enc_cmd->parsed()) return cmd_encode(enc);
    if (dec_cmd->parsed()) return cmd_decode(dec);
    if (syn_cmd->parsed()) return cmd_synth(syn);
    if (swp_cmd->parsed()) return cmd_sweep(swp);
    if (gen_cmd->parsed()) return cmd_gen(gen);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
