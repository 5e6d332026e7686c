#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace geotime {

/// Calendar date. Validity follows the proleptic Gregorian calendar.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    static bool is_leap_year(int y);
    bool valid() const;

    /// Strict "YYYY-MM-DD"; returns nullopt on malformed or invalid dates.
    static std::optional<Date> parse_iso(std::string_view text);
    std::string iso() const;

    friend bool operator==(const Date&, const Date&) = default;
};

/// Ordinal day on a 365-day scale. Leap years collapse: Feb 29 and Mar 1
/// of a leap year both map to 60, so the range is always [1, 365].
int day_of_year(const Date& date);

struct GeoPoint {
    double latitude = 0.0;   // degrees, [-90, 90]
    double longitude = 0.0;  // degrees, [-180, 180]

    bool valid() const;
};

enum class Segment { Title, Summary, Location, Date };

std::string_view segment_name(Segment s);
std::optional<Segment> segment_from_name(std::string_view name);

/// Which event segments feed the structured text, and whether each is
/// prefixed with its name ("Title: ...").
struct SegmentSpec {
    std::vector<Segment> segments{Segment::Title, Segment::Summary,
                                  Segment::Location, Segment::Date};
    bool with_prefix = true;

    bool valid() const;  // non-empty, no duplicates
    /// Stable identifier used in cache manifests, e.g. "title+summary+prefix".
    std::string key() const;

    nlohmann::json to_json() const;
    static SegmentSpec from_json(const nlohmann::json& j);
};

struct EventRecord {
    std::string id;
    std::string title;
    std::string summary;
    std::string location_name;
    double latitude = 0.0;
    double longitude = 0.0;
    Date date;
    std::vector<std::string> categories;
    std::vector<std::string> related_ids;

    GeoPoint point() const { return GeoPoint{latitude, longitude}; }

    nlohmann::json to_json() const;

    friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

/// One validation problem, tied to an input line when known.
struct Diagnostic {
    int line = 0;           // 1-based JSONL line, 0 when not line-scoped
    std::string id;         // offending event id when known
    std::string kind;       // "json", "field", "duplicate_id", "dangling_ref", ...
    std::string message;
    bool fatal = true;      // dangling_ref is a warning, everything else an error

    nlohmann::json to_json() const;
};

/// Immutable ordered event collection with total id lookup.
class Corpus {
public:
    Corpus() = default;
    static Corpus from_events(std::vector<EventRecord> events);  // throws DataError on duplicate id

    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }
    const std::vector<EventRecord>& events() const { return events_; }
    const EventRecord& at(std::size_t i) const { return events_.at(i); }

    const EventRecord* find(const std::string& id) const;
    bool contains(const std::string& id) const { return find(id) != nullptr; }

private:
    std::vector<EventRecord> events_;
    std::map<std::string, std::size_t> index_;
};

struct ParseResult {
    Corpus corpus;
    std::vector<Diagnostic> diagnostics;

    bool ok() const;  // no fatal diagnostics
    std::size_t error_count() const;
    std::size_t warning_count() const;
};

/// Parse a JSON Lines stream, one event object per line. Lines that fail
/// validation are dropped and reported; dangling related_ids are warnings.
ParseResult parse_corpus(std::istream& in);
ParseResult parse_corpus_file(const std::string& path);

/// Inverse of parse_corpus on validated corpora (field-level round trip).
std::string serialize_corpus(const Corpus& corpus);

/// Concatenate the selected segments in spec order. With prefixes each
/// segment renders as "<Name>: <value>" on its own line; without, raw
/// values join with single spaces. Dates render in ISO form.
std::string build_structured_text(const EventRecord& event, const SegmentSpec& spec);

}  // namespace geotime
