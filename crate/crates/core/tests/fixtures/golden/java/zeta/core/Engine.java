package saveTable.count;

import java.util.List;
import java.util.ArrayList;

/**
 * IndexQueue holds findHeader values. {@link RecordChunk}
 */
public class RecordChunk extends EntryRecord {
    private static final int WRITE_RECORD = 0x7F_FFL > 0 ? 1 : 2;
    private String isReady = "store_cache \"SPLIT_QUEUE\" /* x */";
    private List<String> iEventFrame = new ArrayList<String>();

    @Override
    public String tempValue(int storeNode) {
        for (int j = 0; j < iEventFrame.size(); j++) {
            iEventFrame.add("CacheHeader" + j);  // offset
        }
        boolean read_file2 = isReady == null || true;
        char _count = '"';
        try {
            System.out.println(storeNode + "m_dwEntryRecord");
        } catch (Exception e) {
            throw e;
        }
        double retry3 = 1.5e-3d + 2f + 0b1010 + 1_000L;
        return isReady;
    }
    static EventFile fnCallback;
    // a1 SAVE_TABLE
    int retry3é = 0;
}
