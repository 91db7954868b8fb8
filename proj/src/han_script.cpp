// Copyright 2026 The ifkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ifkit/han_script.hpp"

#include <unordered_set>

#include "ifkit/utf8.hpp"

namespace ifkit {

namespace {

// Common characters whose simplified and traditional forms differ.
// Position k of kSimplified pairs with position k of kTraditional.
// Characters shared by both scripts are deliberately absent.
constexpr std::string_view kSimplified =
    "国学书车马鸟龙东乐门问间闻们个这为发时实现话语说读写听买卖见贝页风飞电汉简体"
    "爱医药头脑记让认识谁请谢对难鸡鱼广场报网钱银长张济经红绿蓝黄岁几机号处万与专"
    "业严亚产亲儿两关兴军农刘则动势劳区华单卫厂历压县双变叶吗员响图团园圆块坚备复"
    "夹夺奋妇妈宝宽寻导层属岛币师带帮开异弹归当录总恶战据损换击数旧显暂术权杀条来"
    "杨构标样档桥梦检欢气汇没泽洁测涛满滚点烧热爷牵状独猫环疗盐监盖礼祸离种积稳窝"
    "竞笔筹类粮纪纤约级纯纸线练组细织终绍绘给络统继绩维绵缓编缩罚罗义联肃肤脏脸舰"
    "艺节芦苏虑虫蚁蚂装观规视览觉誉计订讨训议讯访证评诉词译试诗诚诞询详误调谈谊贞"
    "负贡财责贤败货质贩贪购贯贴贵贸费贺资赏赖赛赞赢赵践轨转轮软轻载较辅辆输辞办边"
    "达迁过运还进远违连迟选逊递逻遗邓邮乡郑酱释针钓钟钢铁铜铺链销锁错锦键镇镜闪闭"
    "阅队阳阴际陆陈隐隶雾静韩顶顺须顾顿预领频题额飘饭饮饰馆驾验惊骂骑鲁鸭鹅麦齐齿";
constexpr std::string_view kTraditional =
    "國學書車馬鳥龍東樂門問間聞們個這為發時實現話語說讀寫聽買賣見貝頁風飛電漢簡體"
    "愛醫藥頭腦記讓認識誰請謝對難雞魚廣場報網錢銀長張濟經紅綠藍黃歲幾機號處萬與專"
    "業嚴亞產親兒兩關興軍農劉則動勢勞區華單衛廠歷壓縣雙變葉嗎員響圖團園圓塊堅備複"
    "夾奪奮婦媽寶寬尋導層屬島幣師帶幫開異彈歸當錄總惡戰據損換擊數舊顯暫術權殺條來"
    "楊構標樣檔橋夢檢歡氣匯沒澤潔測濤滿滾點燒熱爺牽狀獨貓環療鹽監蓋禮禍離種積穩窩"
    "競筆籌類糧紀纖約級純紙線練組細織終紹繪給絡統繼績維綿緩編縮罰羅義聯肅膚臟臉艦"
    "藝節蘆蘇慮蟲蟻螞裝觀規視覽覺譽計訂討訓議訊訪證評訴詞譯試詩誠誕詢詳誤調談誼貞"
    "負貢財責賢敗貨質販貪購貫貼貴貿費賀資賞賴賽贊贏趙踐軌轉輪軟輕載較輔輛輸辭辦邊"
    "達遷過運還進遠違連遲選遜遞邏遺鄧郵鄉鄭醬釋針釣鐘鋼鐵銅鋪鏈銷鎖錯錦鍵鎮鏡閃閉"
    "閱隊陽陰際陸陳隱隸霧靜韓頂順須顧頓預領頻題額飄飯飲飾館駕驗驚罵騎魯鴨鵝麥齊齒";

const std::unordered_set<char32_t>& simplified_set() {
  static const auto* set = new std::unordered_set<char32_t>([] {
    std::unordered_set<char32_t> s;
    for (char32_t cp : utf8::decode_all(kSimplified)) s.insert(cp);
    return s;
  }());
  return *set;
}

const std::unordered_set<char32_t>& traditional_set() {
  static const auto* set = new std::unordered_set<char32_t>([] {
    std::unordered_set<char32_t> s;
    for (char32_t cp : utf8::decode_all(kTraditional)) s.insert(cp);
    return s;
  }());
  return *set;
}

}  // namespace

bool is_simplified_only(char32_t cp) { return simplified_set().count(cp) > 0; }
bool is_traditional_only(char32_t cp) { return traditional_set().count(cp) > 0; }

HanScript classify_han_script(std::string_view text) {
  bool saw_han = false;
  bool saw_simplified = false;
  bool saw_traditional = false;
  for (char32_t cp : utf8::decode_all(text)) {
    if (!utf8::is_han(cp)) continue;
    saw_han = true;
    if (is_simplified_only(cp)) saw_simplified = true;
    if (is_traditional_only(cp)) saw_traditional = true;
  }
  if (!saw_han) return HanScript::None;
  if (saw_simplified && saw_traditional) return HanScript::Mixed;
  if (saw_simplified) return HanScript::Simplified;
  if (saw_traditional) return HanScript::Traditional;
  // Only neutral characters: no distinguishing evidence either way.
  return HanScript::None;
}

}  // namespace ifkit
